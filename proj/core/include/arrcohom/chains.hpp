#pragma once

#include "arrcohom/integer_matrix.hpp"
#include "arrcohom/lattice.hpp"

#include <map>
#include <utility>
#include <vector>

namespace arrcohom {

/**
 * A homogeneous integer combination of oriented simplices, each given by its
 * vertex sequence in ascending order. Zero coefficients are never stored.
 */
template <class V>
class FormalChain {
public:
    using Simplex = std::vector<V>;

    explicit FormalChain(int degree = 0) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Simplex, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Throws DomainError if the simplex has the wrong number of vertices.
    void add(const Simplex& simplex, const Integer& coefficient);

    FormalChain boundary() const;
    FormalChain& operator+=(const FormalChain& other);
    FormalChain& operator-=(const FormalChain& other);
    FormalChain operator*(const Integer& scalar) const;

    friend bool operator==(const FormalChain& a, const FormalChain& b)
    {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.degree_ == b.degree_);
    }

private:
    int degree_;
    std::map<Simplex, Integer> terms_;
};

/// Chains in the order complex of a lattice; vertices are stratum indices.
using LabeledChain = FormalChain<std::size_t>;
using ProductVertex = std::pair<std::size_t, std::size_t>;
/// Chains in the order complex of a product poset.
using ProductChain = FormalChain<ProductVertex>;

/**
 * The simplicial cross product: each pair of simplices is triangulated by
 * monotone staircase paths, a horizontal step advancing the first factor.
 * A path is signed by (-1)^(Σ over horizontal steps of the vertical steps
 * before it), so ∂(s×t) = ∂s×t + (-1)^k s×∂t.
 */
ProductChain cross_product(const LabeledChain& s, const LabeledChain& t);

struct JoinImage {
    LabeledChain chain;
    /// Simplices dropped because two consecutive vertices had the same image.
    std::size_t degenerate_dropped = 0;
};

/// Pushes a product chain through (z, w) ↦ z ∩ w (the lattice join).
JoinImage apply_join(const IntersectionLattice& L, const ProductChain& c);

extern template class FormalChain<std::size_t>;
extern template class FormalChain<ProductVertex>;

}  // namespace arrcohom
