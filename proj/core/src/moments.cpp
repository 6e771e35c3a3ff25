#include "uncrel/moments.hpp"

#include <cmath>
#include <sstream>

namespace uncrel {

namespace {

void check_dims(const Observable& a, const StateVector& phi) {
    if (a.dim() != phi.dim()) {
        throw DimMismatch("observable '" + a.name() + "' dim " + std::to_string(a.dim()) +
                          " vs state dim " + std::to_string(phi.dim()));
    }
}

}  // namespace

double expectation(const Observable& a, const StateVector& phi, const Tolerances& tol) {
    check_dims(a, phi);
    const ComplexScalar e = phi.amplitudes().dot(a.matrix() * phi.amplitudes());
    if (std::abs(e.imag()) > tol.rel * (1.0 + a.max_norm())) {
        std::ostringstream os;
        os << "expectation of '" << a.name() << "' has imaginary part " << e.imag();
        throw NonRealExpectation(os.str());
    }
    return e.real();
}

Vector deviation_vector(const Observable& a, const StateVector& phi, const Tolerances& tol) {
    const double mean = expectation(a, phi, tol);
    return a.matrix() * phi.amplitudes() - mean * phi.amplitudes();
}

MomentReport moment_report(const Observable& a, const StateVector& phi, const Tolerances& tol) {
    MomentReport rep;
    rep.mean = expectation(a, phi, tol);
    const Vector dev = a.matrix() * phi.amplitudes() - rep.mean * phi.amplitudes();
    rep.deviation_norm_sq = dev.squaredNorm();
    rep.stddev = std::sqrt(rep.deviation_norm_sq);
    return rep;
}

CovarianceRecord covariance(const Observable& a, const Observable& b,
                            const StateVector& phi, const Tolerances& tol) {
    check_dims(a, phi);
    check_dims(b, phi);
    const Vector da = deviation_vector(a, phi, tol);
    const Vector db = deviation_vector(b, phi, tol);
    CovarianceRecord rec;
    rec.value = da.dot(db);  // <delta_A phi | delta_B phi>
    rec.re_part = rec.value.real();
    rec.im_part = rec.value.imag();
    rec.commutator_expectation = rec.value - std::conj(rec.value);
    return rec;
}

bool deviation_is_zero(double stddev, const Observable& a, const Tolerances& tol) {
    return stddev <= tol.zero * (1.0 + a.max_norm());
}

PearsonCoefficient pearson(const Observable& a, const Observable& b,
                           const StateVector& phi, const Tolerances& tol) {
    const MomentReport ma = moment_report(a, phi, tol);
    const MomentReport mb = moment_report(b, phi, tol);
    if (deviation_is_zero(ma.stddev, a, tol)) {
        throw ZeroDeviation("observable '" + a.name() + "' has vanishing deviation");
    }
    if (deviation_is_zero(mb.stddev, b, tol)) {
        throw ZeroDeviation("observable '" + b.name() + "' has vanishing deviation");
    }
    const CovarianceRecord c = covariance(a, b, phi, tol);
    return PearsonCoefficient{std::abs(c.value) / (ma.stddev * mb.stddev)};
}

}  // namespace uncrel
