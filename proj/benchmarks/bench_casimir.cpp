#include <benchmark/benchmark.h>

#include <random>

#include "casimir/casimir.hpp"
#include "casimir/clifford.hpp"
#include "casimir/uea.hpp"

using namespace casimir;

namespace {

Form dense_form(int n, int p, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Form f(n);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const IndexBlade b = IndexBlade::from_mask(mask);
        if (b.degree() == p) f.add(b, Scalar::fraction(num(rng), den(rng)));
    }
    return f;
}

void BM_CliffordSquare(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Form t = dense_form(n, 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(clifford_mul(t, t));
}
BENCHMARK(BM_CliffordSquare)->DenseRange(5, 8);

void BM_ActThreeForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SpinRepresentation rep(n);
    const Form t = dense_form(n, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(rep.act(t));
}
BENCHMARK(BM_ActThreeForm)->DenseRange(5, 8);

void BM_ExactSpectrumG2(benchmark::State& state) {
    const SpinRepresentation rep(7);
    const SpinEndomorphism w = rep.act(standard_g2_form());
    for (auto _ : state) benchmark::DoNotOptimize(exact_spectrum(w));
}
BENCHMARK(BM_ExactSpectrumG2);

void BM_StiefelSquare(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_stiefel_dirac());
}
BENCHMARK(BM_StiefelSquare);

}  // namespace

BENCHMARK_MAIN();
