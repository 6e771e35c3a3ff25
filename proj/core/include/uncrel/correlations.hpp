#pragma once

#include <vector>

#include "uncrel/relations.hpp"

namespace uncrel {

/// k x k matrix of pairwise Pearson coefficients, unit diagonal.
struct CorrelationMatrix {
    int k = 0;
    Eigen::MatrixXd entries;
    double determinant = 0.0;
    bool synthetic = false;  // built from raw r-values, not a (observables, state) instance
};

struct RegionPoint {
    double r13 = 0.0;
    double r23 = 0.0;
    double det = 0.0;
    bool feasible = false;
};

struct RegionSample {
    double r12 = 0.0;
    double grid_step = 0.0;
    std::vector<RegionPoint> points;
};

struct EntanglementVerdict {
    std::vector<bool> pair_flags;  // pairs in (0,1), (0,2), (1,2) order
    bool triple_flag = false;      // meaningful for 3 observables only
};

struct Theorem2Result {
    double r13 = 0.0;
    double r23 = 0.0;
    bool consistent = false;
};

CorrelationMatrix build_correlation_matrix(const std::vector<Observable>& observables,
                                           const StateVector& phi,
                                           const Tolerances& tol = global_tolerances());

/// Assembles a matrix directly from raw coefficients; flagged synthetic.
CorrelationMatrix synthetic_correlation_matrix(const Eigen::MatrixXd& entries);

/// det C_M(3) = 1 + 2 r12 r13 r23 - r12^2 - r13^2 - r23^2.
double r3_closed_form(double r12, double r13, double r23);

/// Lattice grid over [0,1]^2 of (r13, r23), feasibility from the sign of
/// the closed-form determinant.
RegionSample feasibility_region(double r12, double step);

Theorem2Result theorem2_check(const std::vector<Observable>& observables,
                              const StateVector& phi,
                              const Tolerances& tol = global_tolerances());
Theorem2Result theorem2_check_synthetic(double r12, double r13, double r23,
                                        const Tolerances& tol = global_tolerances());

bool corollary2_check(const std::vector<Observable>& observables,
                      const StateVector& phi,
                      const Tolerances& tol = global_tolerances());
bool corollary2_check_synthetic(double r12, double r23, double r13,
                                const Tolerances& tol = global_tolerances());

EntanglementVerdict classify_entanglement(const std::vector<Observable>& observables,
                                          const StateVector& phi,
                                          const Tolerances& tol = global_tolerances());

/// CSV with header r12,r13,r23,det,feasible; 17 significant digits.
std::string region_to_csv(const RegionSample& region);

}  // namespace uncrel
