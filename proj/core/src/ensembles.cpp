#include "uncrel/ensembles.hpp"

#include "uncrel/correlations.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace uncrel {

namespace {

// splitmix64
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double Rng::uniform01() {
    // 53-bit mantissa, shifted off zero
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::gaussian() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexScalar Rng::complex_gaussian() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return ComplexScalar(radius * std::cos(2.0 * std::numbers::pi * u2),
                         radius * std::sin(2.0 * std::numbers::pi * u2));
}

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix(seed ^ mix(index + 0x9e3779b97f4a7c15ull));
}

void SlackHistogram::add(double slack) {
    if (slack < kLo) {
        ++underflow;
        return;
    }
    if (slack > kHi) {
        ++overflow;
        return;
    }
    const double t = std::log10(slack / kLo) / std::log10(kHi / kLo);
    int bin = static_cast<int>(t * kBins);
    if (bin >= kBins) bin = kBins - 1;
    if (bin < 0) bin = 0;
    ++bins[static_cast<std::size_t>(bin)];
}

StateVector random_state(int dim, Rng& rng, const Tolerances& tol) {
    if (dim < 2) {
        throw DimMismatch("random_state: dim must be >= 2");
    }
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = rng.complex_gaussian();
    }
    v /= v.norm();
    return StateVector(std::move(v), tol);
}

Observable random_hermitian(int dim, Rng& rng, const Tolerances& tol) {
    if (dim < 2) {
        throw DimMismatch("random_hermitian: dim must be >= 2");
    }
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = rng.complex_gaussian();
        }
    }
    Matrix h = 0.5 * (g + g.adjoint());
    return make_observable("G" + std::to_string(dim), std::move(h), tol);
}

std::vector<Observable> pauli_triple(const Tolerances& tol) {
    const ComplexScalar i(0.0, 1.0);
    Matrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, -i, i, 0;
    sz << 1, 0, 0, -1;
    return {make_observable("sigma_x", sx, tol), make_observable("sigma_y", sy, tol),
            make_observable("sigma_z", sz, tol)};
}

namespace {

constexpr double kSaturationTol = 1e-8;

void record(SurveyStatistics& stats, const std::string& key, double slack, bool holds,
            std::uint64_t sample, const std::string& detail) {
    RelationStats& rs = stats.per_relation[key];
    if (rs.count_evaluated == 0) {
        rs.min_slack = slack;
        rs.max_slack = slack;
    } else {
        rs.min_slack = std::min(rs.min_slack, slack);
        rs.max_slack = std::max(rs.max_slack, slack);
    }
    ++rs.count_evaluated;
    if (holds) {
        ++rs.count_holds;
    } else {
        stats.violations.push_back(Violation{sample, key, detail});
    }
    rs.slack_histogram.add(slack);
}

}  // namespace

SurveyStatistics survey(const EnsembleSpec& spec, const Tolerances& tol) {
    if (spec.dim < 2 || spec.n_observables < 2 || spec.n_samples < 0) {
        throw OutOfRange("survey: invalid ensemble spec");
    }
    if (spec.observable_kind == ObservableKind::pauli_fixed &&
        (spec.dim != 2 || spec.n_observables != 3)) {
        throw OutOfRange("survey: pauli_fixed requires dim=2, 3 observables");
    }
    if (spec.observable_kind == ObservableKind::user_supplied &&
        static_cast<int>(spec.user_observables.size()) != spec.n_observables) {
        throw OutOfRange("survey: user_supplied observable count mismatch");
    }

    SurveyStatistics stats;
    stats.spec = spec;
    const std::vector<Observable> paulis =
        spec.observable_kind == ObservableKind::pauli_fixed ? pauli_triple(tol)
                                                            : std::vector<Observable>{};

    for (int s = 0; s < spec.n_samples; ++s) {
        Rng rng(Rng::derive_seed(spec.seed, static_cast<std::uint64_t>(s)));
        std::vector<Observable> obs;
        switch (spec.observable_kind) {
            case ObservableKind::gaussian_hermitian:
                for (int k = 0; k < spec.n_observables; ++k) {
                    obs.push_back(random_hermitian(spec.dim, rng, tol));
                }
                break;
            case ObservableKind::pauli_fixed:
                obs = paulis;
                break;
            case ObservableKind::user_supplied:
                obs = spec.user_observables;
                break;
        }
        const StateVector phi = random_state(spec.dim, rng, tol);
        const auto sample = static_cast<std::uint64_t>(s);

        bool any_zero = false;
        std::vector<double> devs(obs.size());
        for (std::size_t k = 0; k < obs.size(); ++k) {
            devs[k] = moment_report(obs[k], phi, tol).stddev;
            any_zero = any_zero || deviation_is_zero(devs[k], obs[k], tol);
        }

        for (const auto& verdict : evaluate_all(obs, phi, tol)) {
            const std::string key(relation_name(verdict.relation));
            if (verdict.skipped) {
                ++stats.per_relation[key].count_skipped;
                continue;
            }
            std::ostringstream detail;
            detail << "lhs=" << verdict.lhs << " rhs=" << verdict.rhs
                   << " slack=" << verdict.slack << " digest=" << verdict.inputs_digest;
            record(stats, key, verdict.slack, verdict.holds, sample, detail.str());
        }

        if (!any_zero && (obs.size() == 2 || obs.size() == 3)) {
            const CorrelationMatrix cm = build_correlation_matrix(obs, phi, tol);
            const bool in_range =
                cm.determinant >= -tol.rel && cm.determinant <= 1.0 + tol.rel;
            std::ostringstream detail;
            detail << "det=" << cm.determinant;
            record(stats, "CORRELATION_DET", cm.determinant, in_range, sample,
                   detail.str());
        }

        if (spec.dim == 2 && !any_zero) {
            // two-level saturation: every positive-deviation pair is fully
            // correlated, the numerical witness of the d=2 no-decorrelation
            // theorem
            for (std::size_t a = 0; a < obs.size(); ++a) {
                for (std::size_t b = a + 1; b < obs.size(); ++b) {
                    const double r = pearson(obs[a], obs[b], phi, tol).r;
                    const bool ok = std::abs(r - 1.0) <= kSaturationTol;
                    std::ostringstream detail;
                    detail << "r=" << r;
                    record(stats, "QUBIT_SATURATION", -(std::abs(r - 1.0)), ok, sample,
                           detail.str());
                }
            }
        }
    }
    return stats;
}

}  // namespace uncrel
