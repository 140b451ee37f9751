#include "arrcohom/homology.hpp"

#include "arrcohom/errors.hpp"

#include <algorithm>

namespace arrcohom {

GradedAbelianGroup homology(const ChainComplex& C, bool with_generators)
{
    C.verify();
    GradedAbelianGroup H;
    const int lo = C.lowest_degree();
    const int hi = C.highest_degree();
    if (hi < lo) return H;

    std::vector<std::vector<Integer>> factors;
    for (int k = lo; k <= hi; ++k) factors.push_back(invariant_factors(C.boundary(k)));
    auto factors_at = [&](int k) -> const std::vector<Integer>& {
        static const std::vector<Integer> none;
        return (k >= lo && k <= hi) ? factors[static_cast<std::size_t>(k - lo)] : none;
    };

    for (int k = lo; k <= hi; ++k) {
        const std::size_t in = factors_at(k).size();
        const std::size_t out = factors_at(k + 1).size();
        const std::size_t n = C.rank(k);
        if (in + out > n) throw IntegrityError("homology: rank bookkeeping exceeds chain rank");
        std::vector<Integer> torsion;
        for (const auto& d : factors_at(k + 1))
            if (d > 1) torsion.push_back(d);
        H.set(k, AbelianGroup::make(n - in - out, std::move(torsion)));
        if (with_generators && !H[k].is_zero()) H.set_generators(k, HomologyBasis(C, k).generators());
    }
    return H;
}

GradedAbelianGroup simplicial_homology(const SimplicialComplex& K) { return homology(simplicial_chains(K, false)); }

GradedAbelianGroup reduced_homology(const SimplicialComplex& K) { return homology(simplicial_chains(K, true)); }

GradedAbelianGroup pair_homology(const SimplicialComplex& X, const SimplicialComplex& A)
{
    return homology(relative_chains(X, A));
}

GradedAbelianGroup cohomology_from_homology(const GradedAbelianGroup& H)
{
    GradedAbelianGroup out;
    for (const auto& [q, g] : H.groups()) {
        out.add(q, AbelianGroup{g.rank, {}});
        out.add(q + 1, AbelianGroup{0, g.torsion});
    }
    return out;
}

GradedAbelianGroup reduced_cohomology(const SimplicialComplex& K)
{
    return cohomology_from_homology(reduced_homology(K));
}

HomologyBasis::HomologyBasis(const ChainComplex& C, int degree) : degree_(degree)
{
    chain_rank_ = C.rank(degree);
    const std::size_t n = chain_rank_;
    if (n == 0) return;

    const auto S1 = smith_normal_form(C.boundary(degree).to_dense());
    boundary_rank_ = S1.rank;
    const std::size_t r = boundary_rank_;
    kernel_rank_ = n - r;
    const std::size_t z = kernel_rank_;

    kernel_coords_ = IntegerMatrix(z, n);
    for (std::size_t i = 0; i < z; ++i)
        for (std::size_t j = 0; j < n; ++j) kernel_coords_(i, j) = S1.V_inverse(r + i, j);
    cycle_test_ = IntegerMatrix(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) cycle_test_(i, j) = S1.V_inverse(i, j);

    const std::size_t next = C.rank(degree + 1);
    IntegerMatrix image(z, next);
    if (next > 0) {
        const IntegerMatrix up = C.boundary(degree + 1).to_dense();
        image = kernel_coords_ * up;
    }
    const auto S2 = smith_normal_form(image);
    class_map_ = S2.U;
    diag_ = S2.invariant_factors();
    const std::size_t s = S2.rank;

    auto cycle_for = [&](std::size_t i) {
        // kernel basis vector combination V[:, r..] · P⁻¹[:, i]
        ChainVector c(n);
        for (std::size_t a = 0; a < z; ++a) {
            const Integer& w = S2.U_inverse(a, i);
            if (w == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (S1.V(j, r + a) != 0) c[j] += w * S1.V(j, r + a);
        }
        return c;
    };

    std::vector<Integer> torsion;
    for (std::size_t i = s; i < z; ++i) generators_.push_back(cycle_for(i));
    for (std::size_t i = 0; i < s; ++i)
        if (diag_[i] > 1) {
            generators_.push_back(cycle_for(i));
            torsion.push_back(diag_[i]);
        }
    group_ = AbelianGroup{z - s, std::move(torsion)};
}

std::vector<Integer> HomologyBasis::coordinates(std::span<const Integer> cycle) const
{
    if (cycle.size() != chain_rank_) throw DomainError("HomologyBasis::coordinates: chain has wrong length");
    if (chain_rank_ == 0) return {};
    const std::vector<Integer> c(cycle.begin(), cycle.end());
    for (const auto& x : cycle_test_ * c)
        if (x != 0) throw DomainError("HomologyBasis::coordinates: chain is not a cycle");
    std::vector<Integer> y(kernel_rank_);
    for (std::size_t i = 0; i < kernel_rank_; ++i)
        for (std::size_t j = 0; j < chain_rank_; ++j)
            if (cycle[j] != 0 && kernel_coords_(i, j) != 0) y[i] += kernel_coords_(i, j) * cycle[j];
    std::vector<Integer> w = class_map_ * y;

    const std::size_t s = diag_.size();
    std::vector<Integer> out;
    for (std::size_t i = s; i < kernel_rank_; ++i) out.push_back(w[i]);
    for (std::size_t i = 0; i < s; ++i)
        if (diag_[i] > 1) {
            Integer c;
            mpz_fdiv_r(c.get_mpz_t(), w[i].get_mpz_t(), diag_[i].get_mpz_t());
            out.push_back(c);
        }
    return out;
}

bool HomologyBasis::is_zero_class(std::span<const Integer> cycle) const
{
    const auto c = coordinates(cycle);
    return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace arrcohom
