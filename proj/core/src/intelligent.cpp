#include "uncrel/intelligent.hpp"

#include <algorithm>
#include <cmath>

namespace uncrel {

std::vector<IntelligentStateResult> find_intelligent(const Observable& a,
                                                     const Observable& b,
                                                     ComplexScalar z,
                                                     const Tolerances& tol) {
    if (a.dim() != b.dim()) {
        throw DimMismatch("find_intelligent: '" + a.name() + "' dim " +
                          std::to_string(a.dim()) + " vs '" + b.name() + "' dim " +
                          std::to_string(b.dim()));
    }
    const Matrix m = a.matrix() - z * b.matrix();
    const GeneralEigenResult eig = eig_general(m, tol);
    const double res_bound =
        tol.intel_res * (1.0 + a.max_norm() + std::abs(z) * b.max_norm());

    std::vector<IntelligentStateResult> results;
    results.reserve(eig.pairs.size());
    for (const auto& pair : eig.pairs) {
        StateVector phi(pair.vector, tol);
        const Vector da = deviation_vector(a, phi, tol);
        const Vector db = deviation_vector(b, phi, tol);
        const double residual = (da - z * db).norm();
        if (residual > res_bound) continue;
        const double na = da.norm();
        const double nb = db.norm();
        const bool degenerate =
            deviation_is_zero(na, a, tol) || deviation_is_zero(nb, b, tol);
        const double r_value = degenerate ? 0.0 : std::abs(da.dot(db)) / (na * nb);
        results.push_back(
            IntelligentStateResult{z, std::move(phi), residual, r_value, degenerate});
    }
    return results;
}

std::vector<IntelligentStateResult> scan_z(const Observable& a, const Observable& b,
                                           const std::vector<ComplexScalar>& z_grid,
                                           const Tolerances& tol) {
    if (z_grid.empty()) {
        throw EmptyGrid("scan_z: empty z grid");
    }
    std::vector<IntelligentStateResult> all;
    for (const ComplexScalar& z : z_grid) {
        auto batch = find_intelligent(a, b, z, tol);
        for (auto& r : batch) all.push_back(std::move(r));
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const IntelligentStateResult& x, const IntelligentStateResult& y) {
                         if (x.degenerate != y.degenerate) return !x.degenerate;
                         return x.residual < y.residual;
                     });
    return all;
}

IntelligenceTest is_intelligent(const Observable& a, const Observable& b,
                                const StateVector& phi, const Tolerances& tol) {
    const Vector da = deviation_vector(a, phi, tol);
    const Vector db = deviation_vector(b, phi, tol);
    const double na = da.norm();
    const double nb = db.norm();
    IntelligenceTest test;
    if (deviation_is_zero(na, a, tol) || deviation_is_zero(nb, b, tol)) {
        return test;
    }
    const double r = std::abs(da.dot(db)) / (na * nb);
    if (std::abs(r - 1.0) <= tol.intel) {
        test.intelligent = true;
        test.best_z = db.dot(da) / (nb * nb);
    }
    return test;
}

}  // namespace uncrel
