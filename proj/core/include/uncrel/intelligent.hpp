#pragma once

#include <optional>
#include <vector>

#include "uncrel/moments.hpp"

namespace uncrel {

/// One candidate solution of delta_A|phi> = z delta_B|phi>.
struct IntelligentStateResult {
    ComplexScalar z;
    StateVector state;
    double residual = 0.0;  // ||delta_A phi - z delta_B phi||
    double r_value = 0.0;   // Pearson r(A, B); 0 when degenerate
    bool degenerate = false;  // some deviation vanishes, r undefined
};

/// Solves the eigenproblem for A - zB; every eigenvector satisfies the
/// deviation identity. Results are normalized and residual-checked.
std::vector<IntelligentStateResult> find_intelligent(
    const Observable& a, const Observable& b, ComplexScalar z,
    const Tolerances& tol = global_tolerances());

/// find_intelligent over a grid of z, sorted by residual with degenerate
/// results last.
std::vector<IntelligentStateResult> scan_z(
    const Observable& a, const Observable& b,
    const std::vector<ComplexScalar>& z_grid,
    const Tolerances& tol = global_tolerances());

struct IntelligenceTest {
    bool intelligent = false;
    std::optional<ComplexScalar> best_z;  // set when intelligent
};

/// r = 1 characterization; best_z recovered by least-squares projection
/// of delta_A phi onto delta_B phi.
IntelligenceTest is_intelligent(const Observable& a, const Observable& b,
                                const StateVector& phi,
                                const Tolerances& tol = global_tolerances());

}  // namespace uncrel
