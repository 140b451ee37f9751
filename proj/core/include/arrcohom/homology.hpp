#pragma once

#include "arrcohom/chain_complex.hpp"
#include "arrcohom/graded_group.hpp"
#include "arrcohom/smith.hpp"

#include <span>

namespace arrcohom {

/**
 * H_k = ker ∂_k / im ∂_{k+1} over Z. With `with_generators`, cycle
 * representatives (free summands first, then torsion) are attached per degree.
 * Throws IntegrityError if ∂∂ != 0.
 */
GradedAbelianGroup homology(const ChainComplex& C, bool with_generators = false);

/// Unreduced simplicial homology.
GradedAbelianGroup simplicial_homology(const SimplicialComplex& K);

/// Homology of the augmented chain complex; H̃_{-1}({∅}) = Z. The void complex has zero homology.
GradedAbelianGroup reduced_homology(const SimplicialComplex& K);

/// H_*(X, A). Throws DomainError unless A is a subcomplex of X.
GradedAbelianGroup pair_homology(const SimplicialComplex& X, const SimplicialComplex& A);

/// Universal coefficients: H^q has the free rank of H_q and the torsion of H_{q-1}.
GradedAbelianGroup cohomology_from_homology(const GradedAbelianGroup& homology);

/// Reduced cohomology of K (cohomology_from_homology of reduced_homology).
GradedAbelianGroup reduced_cohomology(const SimplicialComplex& K);

/**
 * An explicit basis for H_k of a chain complex, together with the map that
 * takes a cycle to its class coordinates. Uses two dense Smith
 * decompositions: one of ∂_k (its V gives a kernel basis), one of the image
 * of ∂_{k+1} written in that kernel basis.
 */
class HomologyBasis {
public:
    HomologyBasis(const ChainComplex& C, int degree);

    int degree() const { return degree_; }
    const AbelianGroup& group() const { return group_; }

    /// One representative cycle per cyclic summand of group(): free first, then torsion.
    const std::vector<ChainVector>& generators() const { return generators_; }

    /**
     * Class coordinates of a cycle: one integer per summand, torsion entries
     * reduced into [0, order). Throws DomainError if `cycle` is not a cycle
     * or has the wrong length.
     */
    std::vector<Integer> coordinates(std::span<const Integer> cycle) const;

    /// True iff the cycle is a boundary.
    bool is_zero_class(std::span<const Integer> cycle) const;

private:
    int degree_;
    std::size_t chain_rank_ = 0;
    std::size_t boundary_rank_ = 0;  // rank of ∂_k
    IntegerMatrix kernel_coords_;     // rows r.. of V⁻¹ of ∂_k: chain -> kernel coordinates
    IntegerMatrix cycle_test_;        // rows ..r of V⁻¹: vanish exactly on cycles
    IntegerMatrix class_map_;         // P of the second decomposition
    std::vector<Integer> diag_;       // invariant factors of the image, length = its rank
    std::size_t kernel_rank_ = 0;
    AbelianGroup group_;
    std::vector<ChainVector> generators_;
};

}  // namespace arrcohom
