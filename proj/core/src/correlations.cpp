#include "uncrel/correlations.hpp"

#include <Eigen/LU>
#include <cmath>
#include <sstream>

namespace uncrel {

namespace {

double determinant_of(const Eigen::MatrixXd& m) {
    const int k = static_cast<int>(m.rows());
    if (k == 2) {
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    }
    if (k == 3) {
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

}  // namespace

CorrelationMatrix build_correlation_matrix(const std::vector<Observable>& observables,
                                           const StateVector& phi, const Tolerances& tol) {
    const int k = static_cast<int>(observables.size());
    if (k < 2) {
        throw ArityTooSmall("correlation matrix needs k >= 2 observables");
    }
    CorrelationMatrix cm;
    cm.k = k;
    cm.entries = Eigen::MatrixXd::Identity(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const double r = pearson(observables[i], observables[j], phi, tol).r;
            cm.entries(i, j) = r;
            cm.entries(j, i) = r;
        }
    }
    cm.determinant = determinant_of(cm.entries);
    return cm;
}

CorrelationMatrix synthetic_correlation_matrix(const Eigen::MatrixXd& entries) {
    if (entries.rows() != entries.cols() || entries.rows() < 2) {
        throw NonSquare("synthetic correlation matrix must be square, k >= 2");
    }
    CorrelationMatrix cm;
    cm.k = static_cast<int>(entries.rows());
    cm.entries = entries;
    cm.determinant = determinant_of(entries);
    cm.synthetic = true;
    return cm;
}

double r3_closed_form(double r12, double r13, double r23) {
    for (double r : {r12, r13, r23}) {
        if (r < 0.0 || r > 1.0) {
            std::ostringstream os;
            os << "Pearson coefficient " << r << " out of [0, 1]";
            throw OutOfRange(os.str());
        }
    }
    return 1.0 + 2.0 * r12 * r13 * r23 - r12 * r12 - r13 * r13 - r23 * r23;
}

RegionSample feasibility_region(double r12, double step) {
    if (r12 < 0.0 || r12 > 1.0) {
        throw OutOfRange("r12 must be in [0, 1]");
    }
    if (!(step > 0.0) || step > 0.1) {
        throw OutOfRange("step must be in (0, 0.1]");
    }
    RegionSample region;
    region.r12 = r12;
    region.grid_step = step;
    const int n = static_cast<int>(std::floor(1.0 / step)) + 1;
    region.points.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double r13 = std::min(i * step, 1.0);
        for (int j = 0; j < n; ++j) {
            const double r23 = std::min(j * step, 1.0);
            double det = r3_closed_form(r12, r13, r23);
            // lattice points that sit on the boundary circle in exact
            // arithmetic can round to a det of a few ulp below zero
            if (std::abs(det) < 1e-12) det = 0.0;
            region.points.push_back(RegionPoint{r13, r23, det, det >= 0.0});
        }
    }
    return region;
}

Theorem2Result theorem2_check_synthetic(double r12, double r13, double r23,
                                        const Tolerances& tol) {
    if (std::abs(r12 - 1.0) > tol.intel) {
        std::ostringstream os;
        os << "theorem2_check requires r12 = 1, got " << r12;
        throw NotIntelligent(os.str());
    }
    Theorem2Result res;
    res.r13 = r13;
    res.r23 = r23;
    res.consistent = std::abs(r13 - r23) <= tol.theorem_eq();
    return res;
}

Theorem2Result theorem2_check(const std::vector<Observable>& observables,
                              const StateVector& phi, const Tolerances& tol) {
    if (observables.size() != 3) {
        throw ArityMismatch("theorem2_check needs exactly 3 observables");
    }
    const double r12 = pearson(observables[0], observables[1], phi, tol).r;
    const double r13 = pearson(observables[0], observables[2], phi, tol).r;
    const double r23 = pearson(observables[1], observables[2], phi, tol).r;
    return theorem2_check_synthetic(r12, r13, r23, tol);
}

bool corollary2_check_synthetic(double r12, double r23, double r13,
                                const Tolerances& tol) {
    if (std::abs(r12 - 1.0) > tol.intel || std::abs(r23 - 1.0) > tol.intel) {
        std::ostringstream os;
        os << "corollary2_check requires r12 = r23 = 1, got r12 = " << r12
           << ", r23 = " << r23;
        throw NotIntelligent(os.str());
    }
    return std::abs(r13 - 1.0) <= tol.theorem_eq();
}

bool corollary2_check(const std::vector<Observable>& observables,
                      const StateVector& phi, const Tolerances& tol) {
    if (observables.size() != 3) {
        throw ArityMismatch("corollary2_check needs exactly 3 observables");
    }
    const double r12 = pearson(observables[0], observables[1], phi, tol).r;
    const double r13 = pearson(observables[0], observables[2], phi, tol).r;
    const double r23 = pearson(observables[1], observables[2], phi, tol).r;
    return corollary2_check_synthetic(r12, r23, r13, tol);
}

EntanglementVerdict classify_entanglement(const std::vector<Observable>& observables,
                                          const StateVector& phi, const Tolerances& tol) {
    const int n = static_cast<int>(observables.size());
    if (n != 2 && n != 3) {
        throw ArityMismatch("classify_entanglement takes 2 or 3 observables");
    }
    EntanglementVerdict verdict;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const CovarianceRecord c = covariance(observables[i], observables[j], phi, tol);
            const double scale = 1.0 + observables[i].max_norm() * observables[j].max_norm();
            verdict.pair_flags.push_back(std::abs(c.value) > tol.zero * scale);
        }
    }
    if (n == 3) {
        verdict.triple_flag = verdict.pair_flags[0] && verdict.pair_flags[1] &&
                              verdict.pair_flags[2];
    }
    return verdict;
}

std::string region_to_csv(const RegionSample& region) {
    std::ostringstream os;
    os.precision(17);
    os << "r12,r13,r23,det,feasible\n";
    for (const auto& p : region.points) {
        os << region.r12 << ',' << p.r13 << ',' << p.r23 << ',' << p.det << ','
           << (p.feasible ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace uncrel
