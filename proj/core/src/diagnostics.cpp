#include "uncrel/diagnostics.hpp"

#include <cmath>
#include <sstream>

namespace uncrel {

namespace {

RelationVerdict assemble_verdict(RelationId id, double lhs, double rhs,
                                 std::string digest, const Tolerances& tol) {
    RelationVerdict v;
    v.relation = id;
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = lhs - rhs;
    v.tol_abs = tol.rel * (1.0 + std::abs(lhs) + std::abs(rhs));
    v.holds = v.slack >= -v.tol_abs;
    v.inputs_digest = std::move(digest);
    return v;
}

bool is_pearson_form(RelationId id) { return catalog_entry(id).pearson_form; }

}  // namespace

CriticalReport critical_report(const std::vector<Observable>& observables,
                               const StateVector& phi, const Tolerances& tol) {
    const int n = static_cast<int>(observables.size());
    CriticalReport report;
    report.eigen_flags.resize(n);

    std::vector<Vector> devs(n);
    std::vector<double> dev_norm(n);
    for (int i = 0; i < n; ++i) {
        devs[i] = deviation_vector(observables[i], phi, tol);
        dev_norm[i] = devs[i].norm();
        report.eigen_flags[i] = deviation_is_zero(dev_norm[i], observables[i], tol);
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double c = std::abs(devs[i].dot(devs[j]));
            const double scale =
                1.0 + observables[i].max_norm() * observables[j].max_norm();
            if (report.eigen_flags[j] || report.eigen_flags[i]) {
                // eigenstate of one member forces a vanishing covariance
                if (c > tol.rel * scale) {
                    std::ostringstream os;
                    os << "covariance " << c << " nonzero despite eigenstate of '"
                       << observables[report.eigen_flags[j] ? j : i].name() << "'";
                    throw Error(os.str());
                }
            } else if (c <= tol.zero * scale) {
                report.orthogonal_pairs.emplace_back(i, j);
            }
        }
    }

    if (n >= 2) {
        const double eps_abs = tol.zero;
        for (const auto& verdict : evaluate_all(observables, phi, tol)) {
            if (verdict.skipped || is_pearson_form(verdict.relation)) continue;
            const bool lhs_zero = std::abs(verdict.lhs) <= eps_abs;
            const bool rhs_zero = std::abs(verdict.rhs) <= eps_abs;
            if (lhs_zero && rhs_zero) {
                report.trivial_relations.push_back(verdict.relation);
            } else if (rhs_zero) {
                report.zero_bound_relations.push_back(verdict.relation);
            }
        }
    }
    return report;
}

SumReduction sum_reduction(const std::vector<Observable>& observables,
                           const StateVector& phi, int j, const Tolerances& tol) {
    const int n = static_cast<int>(observables.size());
    if (j < 0 || j >= n) {
        throw OutOfRange("sum_reduction: index " + std::to_string(j) + " out of range");
    }
    const double dev_j = moment_report(observables[j], phi, tol).stddev;
    if (!deviation_is_zero(dev_j, observables[j], tol)) {
        throw NotEigenstate("state is not an eigenvector of '" +
                            observables[j].name() + "'");
    }
    std::vector<Observable> rest;
    for (int i = 0; i < n; ++i) {
        if (i != j) rest.push_back(observables[i]);
    }
    SumReduction red;
    red.full = moment_report(sum_observables(observables, tol), phi, tol).stddev;
    red.reduced = rest.empty()
                      ? 0.0
                      : moment_report(sum_observables(rest, tol), phi, tol).stddev;
    red.equal = std::abs(red.full - red.reduced) <= tol.rel * (1.0 + red.full);
    return red;
}

ReducedSumVerdicts reduced_sum_relations(const std::vector<Observable>& observables,
                                         const StateVector& phi, int j,
                                         const Tolerances& tol) {
    const int n = static_cast<int>(observables.size());
    if (n < 3) {
        throw ArityTooSmall("reduced_sum_relations needs N >= 3 observables");
    }
    if (j < 0 || j >= n) {
        throw OutOfRange("reduced_sum_relations: index out of range");
    }
    const double dev_j = moment_report(observables[j], phi, tol).stddev;
    if (!deviation_is_zero(dev_j, observables[j], tol)) {
        throw NotEigenstate("state is not an eigenvector of '" +
                            observables[j].name() + "'");
    }
    std::vector<Observable> rest;
    for (int i = 0; i < n; ++i) {
        if (i != j) rest.push_back(observables[i]);
    }
    const std::string digest = inputs_digest(rest, phi);

    double sum_std = 0.0;
    double sum_var = 0.0;
    for (const auto& a : rest) {
        const double d = moment_report(a, phi, tol).stddev;
        sum_std += d;
        sum_var += d * d;
    }
    const double full = moment_report(sum_observables(rest, tol), phi, tol).stddev;

    ReducedSumVerdicts out;
    out.sum_std = assemble_verdict(RelationId::SUM_STD, sum_std, full, digest, tol);
    // the variance form keeps the original 1/N weight; the 1/(N-1)
    // variant is the self-consistent reading over the remaining terms
    out.sum_var =
        assemble_verdict(RelationId::SUM_VAR, sum_var, full * full / n, digest, tol);
    out.sum_var_tight = assemble_verdict(RelationId::SUM_VAR, sum_var,
                                         full * full / (n - 1), digest, tol);
    return out;
}

}  // namespace uncrel
