#include <benchmark/benchmark.h>

#include "bendix/bending.hpp"
#include "bendix/combinatorics.hpp"
#include "bendix/duality.hpp"
#include "bendix/linalg.hpp"
#include "bendix/reconstruction.hpp"
#include "bendix/rng.hpp"
#include "bendix/spectral.hpp"

namespace {

using namespace bendix;

ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            a(i, j) = Complex(rng.normal(), rng.normal());
    return linalg::hermitize(a);
}

SideLengths bench_sides(int m, int n) {
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) r[i] = 1.0 + 0.05 * (i % 5);
    return SideLengths(m, r);
}

void BM_EigHermitian(benchmark::State& state) {
    const ComplexMatrix a = random_hermitian(state.range(0), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::eig_hermitian(a));
    }
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_SamplePolygon(benchmark::State& state) {
    const SideLengths s = bench_sides(2, state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruction::sample_polygon(s, seed++));
    }
}
BENCHMARK(BM_SamplePolygon)->Arg(6)->Arg(10);

void BM_Bend(benchmark::State& state) {
    const SideLengths s = bench_sides(2, 7);
    const Polygon p = reconstruction::sample_polygon(s, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bending::bend(p, {2, 1, 0.37}));
    }
}
BENCHMARK(BM_Bend);

void BM_ActionValues(benchmark::State& state) {
    const SideLengths s = bench_sides(2, 7);
    const Polygon p = reconstruction::sample_polygon(s, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::action_values(p));
    }
}
BENCHMARK(BM_ActionValues);

void BM_AngleValues(benchmark::State& state) {
    const SideLengths s = bench_sides(2, 7);
    const Polygon p = reconstruction::sample_polygon(s, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bending::angle_values(p));
    }
}
BENCHMARK(BM_AngleValues);

void BM_PoissonBracket(benchmark::State& state) {
    const SideLengths s = bench_sides(1, 6);
    const Polygon p = reconstruction::sample_polygon(s, 5);
    const auto f = bending::lambda_observable(1, 1);
    const auto g = bending::theta_observable(2, 1);
    const double h = bending::default_fd_step(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bending::poisson_bracket_fd(f, g, p, h));
    }
}
BENCHMARK(BM_PoissonBracket);

void BM_LatticeCount(benchmark::State& state) {
    std::vector<Rational> r(state.range(0), Rational(3));
    const SideLengths s(2, r);
    for (auto _ : state) {
        benchmark::DoNotOptimize(combinatorics::count_lattice_points(s));
    }
}
BENCHMARK(BM_LatticeCount)->Arg(6)->Arg(7);

void BM_MultiplicityReport(benchmark::State& state) {
    const SideLengths s(1, std::vector<Rational>{2, 3, 3, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(combinatorics::multiplicity_report(s));
    }
}
BENCHMARK(BM_MultiplicityReport);

void BM_HitchinReport(benchmark::State& state) {
    const SideLengths s(1, std::vector<double>{1.0, 1.1, 0.9, 1.2, 1.05});
    const auto ep = duality::sample_generic_pentagon(s, 7);
    const duality::HitchinSpec spec{{0, 1, 2, 3, 4}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(duality::hitchin_invariance_report(ep, spec));
    }
}
BENCHMARK(BM_HitchinReport);

}  // namespace

BENCHMARK_MAIN();
