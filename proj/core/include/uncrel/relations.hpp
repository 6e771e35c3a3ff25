#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uncrel/moments.hpp"

namespace uncrel {

enum class RelationId {
    RS_PAIR,
    HR_PAIR,
    RS_TRIPLE,
    HR_TRIPLE,
    RS_QUAD,
    HR_QUAD,
    RS_PRODUCT_N,
    BUZANO_STRONG,
    BUZANO_WEAK,
    BUZANO_HR,
    LUPU_STRONG,
    LUPU_WEAK,
    LUPU_HR,
    SUM_STD,
    SUM_VAR,
    PEARSON_PAIR,
    PEARSON_TRIPLE,
    PEARSON_QUAD,
    PEARSON_BUZANO_STRONG,
    PEARSON_BUZANO_WEAK,
    PEARSON_LUPU,
};

struct CatalogEntry {
    RelationId id;
    std::string_view name;
    int arity;            // 0 means any N >= 2
    bool pearson_form;    // needs all deviations strictly positive
};

const std::vector<CatalogEntry>& relation_catalog();
const CatalogEntry& catalog_entry(RelationId id);
std::string_view relation_name(RelationId id);
std::optional<RelationId> relation_from_name(std::string_view name);

/// One evaluated inequality in the lhs >= rhs convention.
struct RelationVerdict {
    RelationId relation;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;      // lhs - rhs
    bool holds = false;      // slack >= -tol_abs
    double tol_abs = 0.0;
    bool skipped = false;    // Pearson form with a vanishing deviation
    std::string inputs_digest;
};

RelationVerdict evaluate(RelationId relation,
                         const std::vector<Observable>& observables,
                         const StateVector& phi,
                         const Tolerances& tol = global_tolerances());

/// Every applicable catalog relation for the given observable count.
/// Pearson forms are emitted as skip records when any deviation vanishes.
std::vector<RelationVerdict> evaluate_all(const std::vector<Observable>& observables,
                                          const StateVector& phi,
                                          const Tolerances& tol = global_tolerances());

struct Lu3bResult {
    double lhs = 0.0;  // dA1 * |C23|
    double rhs = 0.0;  // dA2 * |C13|
    bool satisfied = false;
};

/// Equality constraint available only when (A1, A2) are intelligent in phi.
Lu3bResult lu3b_constraint(const std::vector<Observable>& observables,
                           const StateVector& phi,
                           const Tolerances& tol = global_tolerances());

/// Variance lower bound available only when (A1, A2) are intelligent in phi.
RelationVerdict b3a_bound(const std::vector<Observable>& observables,
                          const StateVector& phi,
                          const Tolerances& tol = global_tolerances());

/// Element-wise sum of same-dimension observables.
Observable sum_observables(const std::vector<Observable>& observables,
                           const Tolerances& tol = global_tolerances());

/// FNV-1a digest over the raw matrix/state bytes, hex-encoded.
std::string inputs_digest(const std::vector<Observable>& observables,
                          const StateVector& phi);

}  // namespace uncrel
