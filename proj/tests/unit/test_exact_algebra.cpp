#include "corpus.hpp"
#include "oracles.hpp"

#include "arrcohom/chain_complex.hpp"
#include "arrcohom/complex_ops.hpp"
#include "arrcohom/errors.hpp"
#include "arrcohom/homology.hpp"
#include "arrcohom/smith.hpp"

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

}  // namespace

TEST_CASE("abelian group normal form")
{
    const auto g = AbelianGroup::make(1, {Integer(2), Integer(3), Integer(1), Integer(4)});
    CHECK(g.rank == 1);
    CHECK(g.torsion == std::vector<Integer>{2, 12});
    CHECK(g.to_string() == "Z ⊕ Z_2 ⊕ Z_12");
    CHECK(AbelianGroup{}.to_string() == "0");
    CHECK(Z(10).to_string() == "Z^10");
    CHECK(AbelianGroup::make(0, {Integer(2), Integer(2)}).to_string() == "Z_2^2");
}

TEST_CASE("smith normal form examples")
{
    const auto zero = smith_normal_form(IntegerMatrix(3, 2));
    CHECK(zero.D.is_zero());
    CHECK(zero.U == IntegerMatrix::identity(3));
    CHECK(zero.V == IntegerMatrix::identity(2));

    const auto A = IntegerMatrix::from_rows({{2, 4}, {6, 8}});
    const auto S = smith_normal_form(A);
    CHECK(S.invariant_factors() == std::vector<Integer>{2, 4});
    CHECK(S.U * A * S.V == S.D);

    oracle::Dense dense{{2, 4}, {6, 8}};
    CHECK(oracle::determinantal_factors(dense) == std::vector<Integer>{2, 4});

    const auto circle = simplicial_chains(skeleton(SimplicialComplex::full_simplex(3), 1), false);
    CHECK(invariant_factors(circle.boundary(1)) == std::vector<Integer>{1, 1});
    CHECK(invariant_factors(circle.boundary(1).to_dense()) == std::vector<Integer>{1, 1});
}

TEST_CASE("sparse and dense invariant factors agree")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> side(1, 12), entry(-4, 4), keep(0, 2);
    for (int n = 0; n < 300; ++n) {
        const std::size_t r = side(rng), c = side(rng);
        SparseMatrix S(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (!keep(rng)) S.add(i, j, entry(rng));
        S.finalize();
        const auto dense = S.to_dense();
        CHECK(invariant_factors(S) == invariant_factors(dense));
        if (r <= 4 && c <= 4) {
            oracle::Dense d(r, std::vector<Integer>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) d[i][j] = dense(i, j);
            CHECK(invariant_factors(S) == oracle::determinantal_factors(d));
        }
    }
}

TEST_CASE("sparse elimination survives int64 overflow")
{
    // powers of a large base force the arbitrary-precision fallback
    SparseMatrix S(3, 3);
    const std::int64_t big = 3037000499;  // about sqrt(2^63)
    S.add(0, 0, big);
    S.add(0, 1, big - 1);
    S.add(1, 0, big - 2);
    S.add(1, 1, big);
    S.add(2, 2, big);
    S.finalize();
    CHECK(invariant_factors(S) == invariant_factors(S.to_dense()));
}

TEST_CASE("simplicial homology")
{
    const auto sphere = skeleton(SimplicialComplex::full_simplex(4), 2);
    CHECK(simplicial_homology(sphere) == graded({{0, Z(1)}, {2, Z(1)}}));
    CHECK(simplicial_homology(corpus::rp2()) == graded({{0, Z(1)}, {1, Zmod(2)}}));
    CHECK(simplicial_homology(SimplicialComplex::full_simplex(1)) == graded({{0, Z(1)}}));

    CHECK(reduced_homology(SimplicialComplex::empty(3)) == graded({{-1, Z(1)}}));
    CHECK(reduced_homology(SimplicialComplex::full_simplex(4)).is_zero());
    CHECK(reduced_homology(corpus::square()) == graded({{1, Z(1)}}));
    CHECK(reduced_homology(SimplicialComplex::void_complex(2)).is_zero());
}

TEST_CASE("pair homology")
{
    const auto edge = SimplicialComplex::full_simplex(2);
    const auto ends = SimplicialComplex::from_facets(2, {{1}, {2}});
    CHECK(pair_homology(edge, ends) == graded({{1, Z(1)}}));
    CHECK(pair_homology(corpus::rp2(), SimplicialComplex::empty(6)) == simplicial_homology(corpus::rp2()));
    CHECK_THROWS_AS(pair_homology(ends, edge), DomainError);
}

TEST_CASE("universal coefficients")
{
    const auto H = graded({{0, Z(1)}, {1, Zmod(2)}});
    CHECK(cohomology_from_homology(H) == graded({{0, Z(1)}, {2, Zmod(2)}}));
    const auto free = graded({{0, Z(1)}, {3, Z(4)}});
    CHECK(cohomology_from_homology(free) == free);
    CHECK(cohomology_from_homology(simplicial_homology(corpus::rp2())) == graded({{0, Z(1)}, {2, Zmod(2)}}));
    CHECK(reduced_cohomology(corpus::rp2()) == graded({{2, Zmod(2)}}));
}

TEST_CASE("homology against rational and mod-p ranks")
{
    std::mt19937_64 rng(37);
    for (int n = 0; n < 150; ++n) {
        const auto K = corpus::random_complex(rng, 2 + n % 6);
        const auto H = reduced_homology(K);
        std::map<int, std::size_t> ranks;
        for (const auto& [q, g] : H.groups())
            if (g.rank) ranks[q] = g.rank;
        CHECK(ranks == oracle::reduced_betti(K, 0));
    }
}

TEST_CASE("chain complex checks")
{
    SparseMatrix d1(1, 1), d2(1, 1);
    d1.add(0, 0, 1);
    d2.add(0, 0, 1);
    d1.finalize();
    d2.finalize();
    const ChainComplex bad(0, {SparseMatrix(0, 1), d1, d2});
    CHECK_THROWS_AS(bad.verify(), IntegrityError);
    CHECK_THROWS_AS(homology(bad), IntegrityError);
    CHECK_NOTHROW(simplicial_chains(corpus::rp2(), true).verify());
}

TEST_CASE("homology bases and class coordinates")
{
    const auto C = simplicial_chains(corpus::rp2(), false);
    const HomologyBasis B(C, 1);
    CHECK(B.group() == Zmod(2));
    REQUIRE(B.generators().size() == 1);
    const auto& g = B.generators()[0];
    CHECK(B.coordinates(g) == std::vector<Integer>{1});
    std::vector<Integer> twice(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) twice[i] = 2 * g[i];
    CHECK(B.is_zero_class(twice));
    CHECK(B.coordinates(twice) == std::vector<Integer>{0});
    std::vector<Integer> not_cycle(g.size());
    not_cycle[0] = 1;
    CHECK_THROWS_AS(B.coordinates(not_cycle), DomainError);
    CHECK_THROWS_AS(B.coordinates(std::vector<Integer>(g.size() + 1)), DomainError);

    const auto torus_like = simplicial_chains(corpus::square(), false);
    const HomologyBasis T(torus_like, 1);
    CHECK(T.group() == Z(1));
    const auto h = homology(torus_like, true);
    CHECK(h.generators(1).size() == 1);
}
