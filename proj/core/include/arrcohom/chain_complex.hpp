#pragma once

#include "arrcohom/integer_matrix.hpp"
#include "arrcohom/simplicial_complex.hpp"

#include <vector>

namespace arrcohom {

/**
 * A bounded chain complex of free abelian groups
 *   C_lo <- C_{lo+1} <- ... <- C_hi
 * given by sparse boundary matrices ∂_k : C_k -> C_{k-1}. The basis of each
 * C_k may carry labels (the simplices it stands for).
 *
 * Simplices are oriented by increasing vertex label; the boundary of
 * [v_0, ..., v_d] is Σ (-1)^i [v_0, ..., v̂_i, ..., v_d].
 */
class ChainComplex {
public:
    ChainComplex() = default;
    /// boundaries[i] is ∂ in degree lowest + i; boundaries[0] must have zero rows.
    ChainComplex(int lowest_degree, std::vector<SparseMatrix> boundaries);

    int lowest_degree() const { return lowest_; }
    int highest_degree() const { return lowest_ + static_cast<int>(boundaries_.size()) - 1; }
    bool has_degree(int k) const { return k >= lowest_ && k <= highest_degree(); }

    std::size_t rank(int k) const;
    /// Requires has_degree(k).
    const SparseMatrix& boundary(int k) const;

    /// Throws IntegrityError unless ∂_{k-1} ∘ ∂_k = 0 for every k and dimensions agree.
    void verify() const;

    void set_basis(int k, std::vector<FaceSet> labels);
    /// Empty when no labels were attached.
    const std::vector<FaceSet>& basis(int k) const;

private:
    int lowest_ = 0;
    std::vector<SparseMatrix> boundaries_;
    std::vector<std::vector<FaceSet>> labels_;
};

/// Simplicial chains of K; with `augmented` the empty simplex spans degree -1.
ChainComplex simplicial_chains(const SimplicialComplex& K, bool augmented);

/// C(X) / C(A) in degrees >= 0, basis = faces of X not in A. Throws DomainError unless A ⊆ X.
ChainComplex relative_chains(const SimplicialComplex& X, const SimplicialComplex& A);

}  // namespace arrcohom
