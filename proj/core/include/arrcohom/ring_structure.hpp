#pragma once

#include "arrcohom/chain_complex.hpp"
#include "arrcohom/chains.hpp"
#include "arrcohom/graded_group.hpp"
#include "arrcohom/homology.hpp"
#include "arrcohom/lattice.hpp"

#include <map>
#include <memory>

namespace arrcohom {

/// d(u) + d(v) - d(u ∩ v) = N.
bool codimension_condition(const IntersectionLattice& L, std::size_t u, std::size_t v);

/**
 * H_*(ΔΔ[⊥,u]) with explicit bases. Relative chains live on the simplices of
 * Δ[⊥,u] that contain both ⊥ and u.
 */
class IntervalHomology {
public:
    IntervalHomology(const IntersectionLattice& L, std::size_t u);

    std::size_t stratum() const { return u_; }
    const GradedAbelianGroup& groups() const { return groups_; }
    /// Cohomological degree N - d(u) - k of a class in H_k.
    int cohomology_degree(int k) const;

    /// Cycle representatives of the cyclic summands of H_k, free first, then torsion.
    std::vector<LabeledChain> generators(int k) const;

    /**
     * Coordinates of the class of a relative cycle in the generators of its
     * degree. Simplices missing ⊥ or u are zero in the relative group and are
     * ignored. Throws DomainError if a simplex is not a chain of [⊥,u] or the
     * chain is not a relative cycle.
     */
    std::vector<Integer> coordinates(const LabeledChain& cycle) const;

private:
    const IntersectionLattice* L_;
    std::size_t u_;
    ChainComplex chains_;
    GradedAbelianGroup groups_;
    std::map<int, std::shared_ptr<HomologyBasis>> bases_;
};

struct ClassProduct {
    bool codimension_condition = false;
    std::size_t target = 0;  ///< u ∩ v
    int degree = 0;          ///< k + l, homological
    LabeledChain chain;      ///< ∨_*(a × b); zero when the condition fails
    AbelianGroup group;      ///< H_{k+l}(ΔΔ[⊥, u ∩ v])
    std::vector<Integer> coordinates;
    std::size_t degenerate_dropped = 0;

    bool is_zero() const;
};

/**
 * The product of [a] ∈ H_k(ΔΔ[⊥,u]) and [b] ∈ H_l(ΔΔ[⊥,v]) in
 * H_{k+l}(ΔΔ[⊥, u ∩ v]). Throws DomainError for a real lattice or if a or b
 * is not a relative cycle.
 */
ClassProduct class_product(const IntersectionLattice& L, std::size_t u, std::size_t v, const LabeledChain& a,
                           const LabeledChain& b);

/// As above, reusing precomputed homology of u, v and the target.
ClassProduct class_product(const IntersectionLattice& L, const IntervalHomology& hu, const IntervalHomology& hv,
                           const IntervalHomology& target, const LabeledChain& a, const LabeledChain& b);

struct ProductEntry {
    std::size_t u = 0, v = 0;
    int k = 0, l = 0;            ///< homological degrees of the factors
    std::size_t i = 0, j = 0;    ///< generator indices
    int p = 0, q = 0;            ///< cohomological degrees of the factors
    std::size_t target = 0;
    AbelianGroup target_group;   ///< H_{k+l}(ΔΔ[⊥, u ∩ v])
    std::vector<Integer> coordinates;
    bool nonzero = false;
    std::size_t degenerate_dropped = 0;
};

struct ProductTable {
    IntersectionLattice lattice;
    /// Positive-degree cohomology classes considered: (stratum, homological degree, generator count).
    std::vector<std::tuple<std::size_t, int, std::size_t>> classes;
    std::size_t stratum_pairs = 0;               ///< unordered pairs of distinct strata carrying classes
    std::size_t codimension_pairs = 0;           ///< of those, pairs meeting the codimension condition
    std::vector<ProductEntry> entries;           ///< generator pairs over codimension pairs
    std::size_t degenerate_dropped = 0;
    bool all_zero = true;
    /// Cohomological bidegrees (p, q) with some nonzero product.
    std::vector<std::pair<int, int>> nonzero_blocks;
};

/**
 * All products of positive-degree generators over unordered pairs of distinct
 * strata, ordered by (u, v, k, l, i, j). Throws DomainError for real ambient.
 */
ProductTable product_table(const SimplicialComplex& K, ArrangementKind kind, Ambient ambient, unsigned jobs = 1);
ProductTable product_table(IntersectionLattice L, unsigned jobs = 1);

struct GolodReport {
    bool common_vertex = false;
    bool coordinate_products_all_zero = false;
    bool golod_certified = false;  ///< = common_vertex; higher Massey products are not computed
    ProductTable table;
};

GolodReport golod_product_check(const SimplicialComplex& K, unsigned jobs = 1);

}  // namespace arrcohom
