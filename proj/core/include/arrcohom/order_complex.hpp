#pragma once

#include "arrcohom/chain_complex.hpp"
#include "arrcohom/lattice.hpp"

namespace arrcohom {

/// Order complexes of a lattice use vertex i+1 for stratum i, so simplices are chains in ascending order.
inline Vertex stratum_vertex(std::size_t stratum) { return static_cast<Vertex>(stratum + 1); }
inline std::size_t vertex_stratum(Vertex v) { return static_cast<std::size_t>(v - 1); }

struct IntervalComplexes {
    SimplicialComplex closed;          ///< Δ[⊥,u]
    SimplicialComplex boundary_union;  ///< Δ(⊥,u] ∪ Δ[⊥,u)
    SimplicialComplex open;            ///< Δ(⊥,u)
};

/// Throws DomainError if u is not an element of L.
IntervalComplexes interval_order_complex(const IntersectionLattice& L, std::size_t u);

/// Augmented chain complex of Δ(⊥,u), built by enumerating chains directly.
ChainComplex open_interval_chains(const IntersectionLattice& L, std::size_t u);

/**
 * Relative chains of the pair ΔΔ[⊥,u], built from interval_order_complex.
 * The basis in degree k is the k-simplices containing both ⊥ and u, in
 * shortlex order of their vertex sets.
 */
ChainComplex interval_pair_chains(const IntersectionLattice& L, std::size_t u);

}  // namespace arrcohom
