#include <benchmark/benchmark.h>

#include "modpoly/epsring.hpp"
#include "modpoly/modpoly.hpp"
#include "modpoly/primes.hpp"

using namespace modpoly;

namespace {

void BM_Fp2Mul(benchmark::State& state) {
    const std::uint64_t p = next_suitable_prime(3, 4, 0, 65536);
    Rng rng(1);
    Fp2 a(rng.below(p), rng.below(p), p), b(rng.below(p), rng.below(p), p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = a * b);
    }
}
BENCHMARK(BM_Fp2Mul);

void BM_EpsMul(benchmark::State& state) {
    const std::uint64_t p = next_suitable_prime(13, 4, 0, 65536);
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    std::vector<Fp2> ca, cb;
    for (std::size_t i = 0; i < k; ++i) {
        ca.emplace_back(rng.below(p), rng.below(p), p);
        cb.emplace_back(rng.below(p), rng.below(p), p);
    }
    EpsSeries a{ca}, b{cb};
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_EpsMul)->Arg(5)->Arg(15)->Arg(52);

void BM_EpsInvert(benchmark::State& state) {
    const std::uint64_t p = next_suitable_prime(13, 4, 0, 65536);
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    std::vector<Fp2> ca;
    ca.emplace_back(1, 2, p);
    for (std::size_t i = 1; i < k; ++i) ca.emplace_back(rng.below(p), rng.below(p), p);
    EpsSeries a{ca};
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_EpsInvert)->Arg(15)->Arg(52);

void BM_DeformationModP(benchmark::State& state) {
    const std::uint64_t ell = static_cast<std::uint64_t>(state.range(0));
    const std::uint64_t p = next_suitable_prime(ell, 4, 0, 65536);
    const Invariant& inv = montgomery_invariant_mode();
    for (auto _ : state) {
        benchmark::DoNotOptimize(deformation_backend(inv, ell, p, Rng(7)));
    }
}
BENCHMARK(BM_DeformationModP)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_InterpolationModP(benchmark::State& state) {
    const std::uint64_t ell = static_cast<std::uint64_t>(state.range(0));
    const std::uint64_t p = next_suitable_prime(ell, 4, 0, 65536);
    const Invariant& inv = montgomery_invariant_mode();
    for (auto _ : state) {
        benchmark::DoNotOptimize(interpolation_backend(inv, ell, p, Rng(7)));
    }
}
BENCHMARK(BM_InterpolationModP)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
