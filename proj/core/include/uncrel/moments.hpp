#pragma once

#include "uncrel/hermitian.hpp"

namespace uncrel {

struct MomentReport {
    double mean = 0.0;               // <A>
    double stddev = 0.0;             // ||(A - <A>)phi||
    double deviation_norm_sq = 0.0;  // stddev^2
};

/// Complex quantum covariance C(A,B) = <AB> - <A><B> with its real/imag
/// split and the commutator expectation it encodes.
struct CovarianceRecord {
    ComplexScalar value;
    double re_part = 0.0;  // classical covariance
    double im_part = 0.0;  // half the commutator expectation magnitude, signed
    ComplexScalar commutator_expectation;  // <[A,B]> = value - conj(value)
};

struct PearsonCoefficient {
    double r = 0.0;  // |C| / (dA * dB), in [0, 1]
};

double expectation(const Observable& a, const StateVector& phi,
                   const Tolerances& tol = global_tolerances());

/// (A - <A> I)|phi>; orthogonal to |phi>.
Vector deviation_vector(const Observable& a, const StateVector& phi,
                        const Tolerances& tol = global_tolerances());

MomentReport moment_report(const Observable& a, const StateVector& phi,
                           const Tolerances& tol = global_tolerances());

CovarianceRecord covariance(const Observable& a, const Observable& b,
                            const StateVector& phi,
                            const Tolerances& tol = global_tolerances());

/// Requires both deviations strictly positive; throws ZeroDeviation
/// naming the degenerate observable otherwise.
PearsonCoefficient pearson(const Observable& a, const Observable& b,
                           const StateVector& phi,
                           const Tolerances& tol = global_tolerances());

/// Scale-aware zero test for a standard deviation.
bool deviation_is_zero(double stddev, const Observable& a,
                       const Tolerances& tol = global_tolerances());

}  // namespace uncrel
