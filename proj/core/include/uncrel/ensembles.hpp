#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uncrel/relations.hpp"

namespace uncrel {

/// Deterministic 64-bit generator. All library randomness flows through
/// one of these, seeded explicitly; Gaussians use Box-Muller so streams
/// are identical across standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform01();         // in (0, 1)
    double gaussian();          // standard normal
    ComplexScalar complex_gaussian();  // independent N(0,1) re/im

    /// Sub-seed derivation for deterministic fan-out: the stream for
    /// (seed, index) is the same regardless of worker layout.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

private:
    std::uint64_t state_;
};

enum class ObservableKind { gaussian_hermitian, pauli_fixed, user_supplied };

struct EnsembleSpec {
    int dim = 2;
    int n_observables = 2;
    int n_samples = 0;
    std::uint64_t seed = 0;
    ObservableKind observable_kind = ObservableKind::gaussian_hermitian;
    std::vector<Observable> user_observables;  // for user_supplied
};

struct SlackHistogram {
    static constexpr int kBins = 50;
    static constexpr double kLo = 1e-15;
    static constexpr double kHi = 1e2;

    std::vector<std::uint64_t> bins = std::vector<std::uint64_t>(kBins, 0);
    std::uint64_t underflow = 0;
    std::uint64_t overflow = 0;

    void add(double slack);
};

struct RelationStats {
    std::uint64_t count_evaluated = 0;
    std::uint64_t count_holds = 0;
    std::uint64_t count_skipped = 0;
    double min_slack = 0.0;
    double max_slack = 0.0;
    SlackHistogram slack_histogram;
};

struct Violation {
    std::uint64_t sample_index;
    std::string relation;
    std::string detail;
};

struct SurveyStatistics {
    EnsembleSpec spec;
    std::map<std::string, RelationStats> per_relation;
    std::vector<Violation> violations;  // must be empty on a sound build
};

/// Haar-uniform unit vector: normalized i.i.d. complex Gaussians.
StateVector random_state(int dim, Rng& rng,
                         const Tolerances& tol = global_tolerances());

/// GUE draw (G + G^H)/2 with standard complex Gaussian entries.
Observable random_hermitian(int dim, Rng& rng,
                            const Tolerances& tol = global_tolerances());

/// Fixed Pauli triple sigma_x, sigma_y, sigma_z (dim 2 only).
std::vector<Observable> pauli_triple(const Tolerances& tol = global_tolerances());

/// Monte-Carlo soundness sweep over the full relation catalog, plus
/// correlation-matrix realizability and d=2 saturation checks.
SurveyStatistics survey(const EnsembleSpec& spec,
                        const Tolerances& tol = global_tolerances());

}  // namespace uncrel
