#include "corpus.hpp"
#include "oracles.hpp"

#include "arrcohom/complex_ops.hpp"
#include "arrcohom/errors.hpp"
#include "arrcohom/gm_cohomology.hpp"

#include <doctest.h>

#include <random>

using namespace arrcohom;

namespace {

AbelianGroup Z(std::size_t r) { return AbelianGroup{r, {}}; }
AbelianGroup Zmod(long n) { return AbelianGroup{0, {Integer(n)}}; }

GradedAbelianGroup graded(std::initializer_list<std::pair<int, AbelianGroup>> g)
{
    GradedAbelianGroup out;
    for (const auto& [q, a] : g) out.add(q, a);
    return out;
}

std::map<int, std::size_t> rational(const GradedAbelianGroup& H)
{
    std::map<int, std::size_t> out;
    for (const auto& [q, g] : H.groups())
        if (g.rank) out[q] = g.rank;
    return out;
}

}  // namespace

TEST_CASE("RP2 diagonal complement")
{
    const auto K = corpus::rp2();
    const auto expected = graded({{0, Z(1)}, {3, Z(10)}, {4, Z(15)}, {5, Z(6)}, {7, Zmod(2)}});
    CHECK(diagonal_cohomology(K, Ambient::Complex) == expected);
    CHECK(diagonal_cohomology_via_links(K) == expected);
    CHECK(diagonal_cohomology_via_subcomplexes(K) == expected);

    GmOptions bounded;
    bounded.max_q = 4;
    CHECK(diagonal_cohomology(K, Ambient::Complex, bounded) == graded({{0, Z(1)}, {3, Z(10)}, {4, Z(15)}}));

    GmOptions threads;
    threads.jobs = 4;
    CHECK(diagonal_cohomology(K, Ambient::Complex, threads) == expected);

    CHECK(diagonal_cohomology(K, Ambient::Real) == graded({{0, Z(1)}, {1, Z(31)}, {2, Zmod(2)}}));
}

TEST_CASE("per-stratum terms")
{
    const auto L = diagonal_lattice(corpus::rp2(), Ambient::Complex);
    const auto r = gm_terms(L);
    std::size_t triples = 0;
    for (const auto& t : r.terms) {
        if (L[t.stratum].blocks.size() == 1 && L[t.stratum].blocks[0].size() == 3) {
            CHECK(t.cohomology == graded({{3, Z(1)}}));
            ++triples;
        }
        if (t.stratum == *L.index_of({FaceSet::range(6)})) CHECK(t.cohomology == graded({{7, Zmod(2)}}));
    }
    CHECK(triples == 10);
}

TEST_CASE("small diagonal complements")
{
    CHECK(diagonal_cohomology(SimplicialComplex::full_simplex(4), Ambient::Complex) == graded({{0, Z(1)}}));
    CHECK(diagonal_cohomology_via_links(SimplicialComplex::full_simplex(4)) == graded({{0, Z(1)}}));
    CHECK(diagonal_cohomology_via_subcomplexes(SimplicialComplex::full_simplex(4)) == graded({{0, Z(1)}}));
    CHECK(diagonal_cohomology(corpus::square(), Ambient::Complex) == graded({{0, Z(1)}, {1, Z(2)}, {2, Z(1)}}));
    CHECK(diagonal_cohomology(corpus::square(), Ambient::Real) == graded({{0, Z(4)}}));
    const auto L = cone_extension(SimplicialComplex::from_facets(2, {{1}, {2}}));
    CHECK(diagonal_cohomology_via_links(L) == diagonal_cohomology(L, Ambient::Complex));
    CHECK_THROWS_AS(diagonal_cohomology_via_links(corpus::square()), DomainError);
    CHECK_THROWS_AS(diagonal_cohomology_via_subcomplexes(corpus::square()), DomainError);
}

TEST_CASE("seven-vertex cone complex")
{
    const auto K = cone_extension(corpus::rp2());
    const auto expected = graded({{0, Z(1)}, {5, Z(10)}, {6, Z(15)}, {7, Z(6)}, {9, Zmod(2)}});
    CHECK(diagonal_cohomology_via_subcomplexes(K) == expected);
    CHECK(diagonal_cohomology(K, Ambient::Complex) == expected);
}

TEST_CASE("coordinate complements")
{
    const auto two = SimplicialComplex::from_facets(2, {{1}, {2}});
    CHECK(coordinate_cohomology(two, Ambient::Complex) == graded({{0, Z(1)}, {3, Z(1)}}));
    CHECK(coordinate_cohomology(corpus::square(), Ambient::Complex) == graded({{0, Z(1)}, {3, Z(2)}, {6, Z(1)}}));
    const auto K = corpus::rp2();
    CHECK(reduced_part(coordinate_cohomology(K, Ambient::Complex)) ==
          reduced_part(diagonal_cohomology(K, Ambient::Complex)).shifted(2));
    CHECK(coordinate_cohomology_hochster(K, Ambient::Complex) == coordinate_cohomology(K, Ambient::Complex));
    CHECK(coordinate_cohomology(SimplicialComplex::empty(2), Ambient::Complex) ==
          graded({{0, Z(1)}, {1, Z(2)}, {2, Z(1)}}));
}

TEST_CASE("coordinate cohomology against brute-force subcomplex sums")
{
    std::mt19937_64 rng(59);
    for (int n = 0; n < 80; ++n) {
        const auto K = corpus::random_complex(rng, 2 + n % 5);
        for (bool cplx : {true, false}) {
            const auto H = coordinate_cohomology(K, cplx ? Ambient::Complex : Ambient::Real);
            CHECK(rational(H) == oracle::coordinate_betti(K, cplx, 0));
            CHECK(H == coordinate_cohomology_hochster(K, cplx ? Ambient::Complex : Ambient::Real));
        }
    }
}

TEST_CASE("pair oracle agrees with the open-interval route")
{
    GmOptions pair;
    pair.pair_oracle = true;
    std::mt19937_64 rng(61);
    for (int n = 0; n < 40; ++n) {
        const auto K = corpus::random_complex(rng, 3 + n % 3);
        if (K.has_ghost_vertices()) continue;
        CHECK(diagonal_cohomology(K, Ambient::Complex, pair) == diagonal_cohomology(K, Ambient::Complex));
    }
}

TEST_CASE("Kunneth over the rationals")
{
    std::mt19937_64 rng(67);
    for (int n = 0; n < 25; ++n) {
        const auto A = corpus::random_complex(rng, 2 + n % 3), B = corpus::random_complex(rng, 2 + (n / 3) % 3);
        if (A.has_ghost_vertices() || B.has_ghost_vertices()) continue;
        const auto a = rational(diagonal_cohomology(A, Ambient::Complex));
        const auto b = rational(diagonal_cohomology(B, Ambient::Complex));
        std::map<int, std::size_t> conv;
        for (auto [p, x] : a)
            for (auto [q, y] : b) conv[p + q] += x * y;
        CHECK(rational(diagonal_cohomology(join_complex(A, B), Ambient::Complex)) == conv);
    }
}

TEST_CASE("complex diagonal cohomology vanishes above N - 2")
{
    std::mt19937_64 rng(71);
    for (int n = 0; n < 60; ++n) {
        const auto K = corpus::random_complex(rng, 2 + n % 5);
        if (K.has_ghost_vertices()) continue;
        const auto H = diagonal_cohomology(K, Ambient::Complex);
        for (int q : H.degrees()) CHECK(q <= 2 * K.vertex_count() - 2);
    }
}

TEST_CASE("reduced part")
{
    CHECK(reduced_part(graded({{0, Z(3)}, {2, Z(1)}})) == graded({{0, Z(2)}, {2, Z(1)}}));
    CHECK(reduced_part(graded({{0, Z(1)}})).is_zero());
}
