// Micro-benchmarks for the hot paths: eigendecomposition, full catalog
// evaluation, and end-to-end survey sample throughput.
#include <benchmark/benchmark.h>

#include "uncrel/correlations.hpp"
#include "uncrel/ensembles.hpp"
#include "uncrel/intelligent.hpp"

namespace {

using namespace uncrel;

void bm_eig_hermitian(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    Rng rng(1);
    const Observable a = random_hermitian(dim, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(a));
    }
    state.SetComplexityN(dim);
}
BENCHMARK(bm_eig_hermitian)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void bm_evaluate_all(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    Rng rng(2);
    const std::vector<Observable> obs = {random_hermitian(dim, rng),
                                         random_hermitian(dim, rng),
                                         random_hermitian(dim, rng)};
    const StateVector phi = random_state(dim, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_all(obs, phi));
    }
}
BENCHMARK(bm_evaluate_all)->RangeMultiplier(2)->Range(2, 64);

void bm_correlation_matrix(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    Rng rng(3);
    const std::vector<Observable> obs = {random_hermitian(dim, rng),
                                         random_hermitian(dim, rng),
                                         random_hermitian(dim, rng)};
    const StateVector phi = random_state(dim, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_correlation_matrix(obs, phi));
    }
}
BENCHMARK(bm_correlation_matrix)->Arg(4)->Arg(16)->Arg(64);

void bm_find_intelligent(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    Rng rng(4);
    const Observable a = random_hermitian(dim, rng);
    const Observable b = random_hermitian(dim, rng);
    const ComplexScalar z(0.7, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_intelligent(a, b, z));
    }
}
BENCHMARK(bm_find_intelligent)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void bm_survey_samples(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    EnsembleSpec spec;
    spec.dim = dim;
    spec.n_observables = 3;
    spec.n_samples = 100;
    spec.seed = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(survey(spec));
    }
    state.SetItemsProcessed(state.iterations() * spec.n_samples);
}
BENCHMARK(bm_survey_samples)->Arg(2)->Arg(4)->Arg(8);

void bm_feasibility_region(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(feasibility_region(0.9, 0.005));
    }
}
BENCHMARK(bm_feasibility_region);

}  // namespace

BENCHMARK_MAIN();
