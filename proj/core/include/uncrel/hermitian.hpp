#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "uncrel/types.hpp"

namespace uncrel {

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Max-entry magnitude; the norm used for all tolerance scaling.
double max_entry_norm(const Matrix& m);

/// Normalized d-dimensional complex vector, d >= 2.
/// Inputs within norm_fix of unit norm are re-normalized; anything
/// further off is rejected.
class StateVector {
public:
    explicit StateVector(Vector amplitudes,
                         const Tolerances& tol = global_tolerances());

    Eigen::Index dim() const { return amps_.size(); }
    const Vector& amplitudes() const { return amps_; }
    ComplexScalar operator[](Eigen::Index i) const { return amps_(i); }

private:
    Vector amps_;
};

/// Named d x d Hermitian matrix.
class Observable {
public:
    const std::string& name() const { return name_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const Matrix& matrix() const { return matrix_; }
    double max_norm() const { return max_norm_; }

    friend Observable make_observable(std::string name, Matrix entries,
                                      const Tolerances& tol);

private:
    Observable(std::string name, Matrix m, double max_norm)
        : name_(std::move(name)), matrix_(std::move(m)), max_norm_(max_norm) {}

    std::string name_;
    Matrix matrix_;
    double max_norm_;
};

/// Validates squareness, finiteness and Hermiticity.
Observable make_observable(std::string name, Matrix entries,
                           const Tolerances& tol = global_tolerances());

struct EigenPair {
    ComplexScalar value;
    Vector vector;  // unit norm
};

struct GeneralEigenResult {
    std::vector<EigenPair> pairs;
    bool defective = false;  // fewer than d independent eigenvectors
};

/// Conjugate-linear in the first argument.
ComplexScalar inner_product(const Vector& u, const Vector& v);

/// AB - BA; anti-Hermitian for Hermitian inputs.
Matrix commutator(const Observable& a, const Observable& b);

/// Eigendecomposition of a Hermitian observable. Values ascending,
/// vectors orthonormal, residual-checked.
std::vector<EigenPair> eig_hermitian(const Observable& a,
                                     const Tolerances& tol = global_tolerances());

/// Eigendecomposition of an arbitrary complex matrix. Pairs failing the
/// residual bound are dropped; a rank-deficient eigenvector set is
/// reported as defective, not fatal.
GeneralEigenResult eig_general(const Matrix& m,
                               const Tolerances& tol = global_tolerances());

}  // namespace uncrel
