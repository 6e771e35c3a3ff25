#pragma once

#include <utility>
#include <vector>

#include "uncrel/relations.hpp"

namespace uncrel {

/// Critical-point taxonomy for a set of observables in a state:
/// eigenstate degeneracies, orthogonal deviation pairs, and the relations
/// they trivialize.
struct CriticalReport {
    std::vector<bool> eigen_flags;  // phi is an eigenvector of A_j
    std::vector<std::pair<int, int>> orthogonal_pairs;  // <psi_i|psi_j> = 0, both dev > 0
    std::vector<RelationId> trivial_relations;     // lhs and rhs both ~ 0
    std::vector<RelationId> zero_bound_relations;  // rhs ~ 0 but lhs > 0
};

CriticalReport critical_report(const std::vector<Observable>& observables,
                               const StateVector& phi,
                               const Tolerances& tol = global_tolerances());

struct SumReduction {
    double full = 0.0;     // stddev of the sum over all observables
    double reduced = 0.0;  // stddev with observable j removed
    bool equal = false;
};

/// Requires phi to be an eigenvector of observables[j] (0-based).
SumReduction sum_reduction(const std::vector<Observable>& observables,
                           const StateVector& phi, int j,
                           const Tolerances& tol = global_tolerances());

struct ReducedSumVerdicts {
    RelationVerdict sum_std;        // over the N-1 remaining observables
    RelationVerdict sum_var;        // variance form keeping the 1/N factor
    RelationVerdict sum_var_tight;  // informational 1/(N-1) variant
};

/// Reduced sum relations after dropping an eigenstate observable; N >= 3.
ReducedSumVerdicts reduced_sum_relations(const std::vector<Observable>& observables,
                                         const StateVector& phi, int j,
                                         const Tolerances& tol = global_tolerances());

}  // namespace uncrel
