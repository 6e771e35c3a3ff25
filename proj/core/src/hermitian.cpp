#include "uncrel/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace uncrel {

Tolerances& global_tolerances() {
    static Tolerances tol;
    return tol;
}

double max_entry_norm(const Matrix& m) {
    return m.cwiseAbs().maxCoeff();
}

StateVector::StateVector(Vector amplitudes, const Tolerances& tol)
    : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) {
        throw DimMismatch("StateVector requires dim >= 2, got " +
                          std::to_string(amps_.size()));
    }
    if (!amps_.allFinite()) {
        throw NonFinite("StateVector amplitudes must be finite");
    }
    const double n = amps_.norm();
    if (std::abs(n - 1.0) > tol.norm_fix) {
        std::ostringstream os;
        os << "StateVector norm " << n << " deviates from 1 beyond " << tol.norm_fix;
        throw NormalizationError(os.str());
    }
    if (std::abs(n - 1.0) > tol.norm) {
        amps_ /= n;
    }
}

Observable make_observable(std::string name, Matrix entries, const Tolerances& tol) {
    if (entries.rows() != entries.cols()) {
        throw NonSquare("observable '" + name + "': " + std::to_string(entries.rows()) +
                        "x" + std::to_string(entries.cols()));
    }
    if (entries.rows() < 1) {
        throw NonSquare("observable '" + name + "' is empty");
    }
    if (!entries.allFinite()) {
        throw NonFinite("observable '" + name + "' has non-finite entries");
    }
    const double mn = max_entry_norm(entries);
    const double asym = max_entry_norm(entries - entries.adjoint());
    if (asym > tol.herm * (1.0 + mn)) {
        std::ostringstream os;
        os << "observable '" << name << "' is not Hermitian: max |M - M^H| entry = " << asym;
        throw NonHermitian(os.str());
    }
    return Observable(std::move(name), std::move(entries), mn);
}

ComplexScalar inner_product(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) {
        throw DimMismatch("inner_product: dims " + std::to_string(u.size()) +
                          " vs " + std::to_string(v.size()));
    }
    return u.dot(v);  // Eigen's dot conjugates the first argument
}

Matrix commutator(const Observable& a, const Observable& b) {
    if (a.dim() != b.dim()) {
        throw DimMismatch("commutator: '" + a.name() + "' dim " + std::to_string(a.dim()) +
                          " vs '" + b.name() + "' dim " + std::to_string(b.dim()));
    }
    return a.matrix() * b.matrix() - b.matrix() * a.matrix();
}

std::vector<EigenPair> eig_hermitian(const Observable& a, const Tolerances& tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("eig_hermitian failed on '" + a.name() + "'");
    }
    const auto d = a.dim();
    const double bound = tol.eig * (1.0 + a.max_norm() * static_cast<double>(d));
    std::vector<EigenPair> pairs;
    pairs.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) {
        EigenPair p{ComplexScalar(solver.eigenvalues()(i), 0.0),
                    solver.eigenvectors().col(i)};
        const double res = (a.matrix() * p.vector - p.value * p.vector).norm();
        if (res > bound) {
            throw ConvergenceFailure("eig_hermitian residual " + std::to_string(res) +
                                     " exceeds bound on '" + a.name() + "'");
        }
        pairs.push_back(std::move(p));
    }
    return pairs;
}

GeneralEigenResult eig_general(const Matrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols()) {
        throw NonSquare("eig_general: matrix must be square");
    }
    if (!m.allFinite()) {
        throw NonFinite("eig_general: non-finite entries");
    }
    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("eig_general: iteration budget exceeded");
    }
    const auto d = m.rows();
    const double bound = tol.eig * (1.0 + max_entry_norm(m) * static_cast<double>(d));

    GeneralEigenResult out;
    Matrix kept(d, d);
    Eigen::Index nkept = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        Vector v = solver.eigenvectors().col(i);
        const double vn = v.norm();
        if (vn <= 0.0) continue;
        v /= vn;
        const ComplexScalar lam = solver.eigenvalues()(i);
        if ((m * v - lam * v).norm() > bound) continue;
        out.pairs.push_back(EigenPair{lam, v});
        kept.col(nkept++) = v;
    }
    if (nkept < d) {
        out.defective = true;
    } else {
        Eigen::ColPivHouseholderQR<Matrix> qr(kept.leftCols(nkept));
        qr.setThreshold(1e-8);
        out.defective = qr.rank() < d;
    }
    return out;
}

}  // namespace uncrel
