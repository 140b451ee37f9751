#include "arrcohom/complex_ops.hpp"
#include "arrcohom/gm_cohomology.hpp"
#include "arrcohom/lattice.hpp"
#include "arrcohom/ring_structure.hpp"
#include "arrcohom/smith.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace arrcohom;

namespace {

SimplicialComplex rp2()
{
    return SimplicialComplex::from_facets(6, {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                                              {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
}

IntegerMatrix random_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntegerMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = entry(rng);
    return A;
}

void BM_SmithDense(benchmark::State& state)
{
    const auto A = random_matrix(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithDense)->Arg(5)->Arg(10)->Arg(20);

void BM_InvariantFactorsSparse(benchmark::State& state)
{
    const auto K = barycentric_subdivision(rp2()).complex;
    const auto C = simplicial_chains(K, false);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(C.boundary(state.range(0))));
}
BENCHMARK(BM_InvariantFactorsSparse)->Arg(1)->Arg(2);

void BM_DiagonalLattice(benchmark::State& state)
{
    const auto K = skeleton(SimplicialComplex::full_simplex(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(diagonal_lattice(K, Ambient::Complex));
}
BENCHMARK(BM_DiagonalLattice)->Arg(5)->Arg(6)->Arg(7);

void BM_GmRp2(benchmark::State& state)
{
    const auto K = rp2();
    for (auto _ : state) benchmark::DoNotOptimize(diagonal_cohomology(K, Ambient::Complex));
}
BENCHMARK(BM_GmRp2);

void BM_ThreePathsRp2(benchmark::State& state)
{
    const auto K = rp2();
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonal_cohomology_via_links(K));
        benchmark::DoNotOptimize(diagonal_cohomology_via_subcomplexes(K));
    }
}
BENCHMARK(BM_ThreePathsRp2);

void BM_ProductTableRp2(benchmark::State& state)
{
    const auto K = rp2();
    for (auto _ : state)
        benchmark::DoNotOptimize(product_table(K, ArrangementKind::Diagonal, Ambient::Complex, state.range(0)));
}
BENCHMARK(BM_ProductTableRp2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
