#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>

namespace uncrel {

using ComplexScalar = std::complex<double>;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimMismatch : public Error { public: using Error::Error; };
class NonSquare : public Error { public: using Error::Error; };
class NonHermitian : public Error { public: using Error::Error; };
class NonFinite : public Error { public: using Error::Error; };
class NormalizationError : public Error { public: using Error::Error; };
class ConvergenceFailure : public Error { public: using Error::Error; };
class NonRealExpectation : public Error { public: using Error::Error; };
class ZeroDeviation : public Error { public: using Error::Error; };
class ArityMismatch : public Error { public: using Error::Error; };
class ArityTooSmall : public Error { public: using Error::Error; };
class NotIntelligent : public Error { public: using Error::Error; };
class NotEigenstate : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class EmptyGrid : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

/// Tolerance knobs shared across the library. Structural tolerances
/// (herm, intel, ...) are independent of the generic relative tolerance.
struct Tolerances {
    double rel = 1e-9;        // generic relative tolerance for invariant checks
    double herm = 1e-10;      // Hermiticity gate, scaled by (1 + max-entry norm)
    double norm = 1e-9;       // accepted state-normalization error
    double norm_fix = 1e-6;   // states off by at most this are re-normalized
    double eig = 1e-10;       // eigen residual scale
    double zero = 1e-12;      // zero-deviation classification, scaled
    double intel = 1e-6;      // |r - 1| window for "intelligent" classification
    double intel_res = 1e-8;  // deviation-identity residual scale
    double mach = 1e-14;      // accumulation floor

    double theorem_eq() const { return std::max(1e-6, 10.0 * intel); }
};

/// Mutable process-wide defaults; the CLI adjusts these from flags.
Tolerances& global_tolerances();

}  // namespace uncrel
