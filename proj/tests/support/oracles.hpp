#pragma once

#include "arrcohom/face_set.hpp"
#include "arrcohom/integer_matrix.hpp"
#include "arrcohom/simplicial_complex.hpp"

#include <cstdint>
#include <map>
#include <vector>

// Brute-force references used to check the library. Nothing here calls the
// library's combinatorics or homology code; complexes are read only through
// vertex_count() and facets().
namespace oracle {

using arrcohom::FaceSet;
using arrcohom::Integer;
using arrcohom::SimplicialComplex;
using Mask = std::uint64_t;
using Dense = std::vector<std::vector<Integer>>;

std::vector<Mask> facet_masks(const SimplicialComplex& K);
bool is_face(const std::vector<Mask>& facets, Mask s);
/// Every face including ∅, ascending by (size, mask).
std::vector<Mask> all_faces(const SimplicialComplex& K);
FaceSet to_face(Mask s);
Mask to_mask(const FaceSet& f);

std::vector<FaceSet> missing_faces(const SimplicialComplex& K);
/// Faces of the Alexander dual as masks.
std::vector<Mask> alexander_dual_faces(const SimplicialComplex& K);

std::size_t rank_rational(Dense A);
std::size_t rank_mod_p(const Dense& A, long p);
Integer determinant(Dense A);
/// Invariant factors through gcds of all k x k minors. Small matrices only.
std::vector<Integer> determinantal_factors(const Dense& A);

/// Dense boundary matrices of a family of simplices, keyed by dimension.
struct Chains {
    std::map<int, std::vector<Mask>> cells;
    std::map<int, Dense> boundary;  // boundary[d] : C_d -> C_{d-1}
};
/// `augmented` adds ∅ in dimension -1. `relative_to` is removed from the cell set.
Chains chains_of(const std::vector<Mask>& faces, bool augmented);

/// Betti numbers of a chain family over Q (p = 0) or F_p.
std::map<int, std::size_t> betti(const Chains& C, long p);
/// Reduced Betti numbers of K over Q or F_p; {∅} has b_{-1} = 1.
std::map<int, std::size_t> reduced_betti(const SimplicialComplex& K, long p);
/// Faces of K inside the vertex set J.
std::vector<Mask> restricted_faces(const SimplicialComplex& K, Mask J);

/// dim H^q(U(K); F) with F = Q (p = 0) or F_p, summing reduced Betti numbers of full subcomplexes.
std::map<int, std::size_t> coordinate_betti(const SimplicialComplex& K, bool complex_ambient, long p);
/// dim H^q(D(K); F) for common-vertex K, from full subcomplexes.
std::map<int, std::size_t> diagonal_betti(const SimplicialComplex& K, bool complex_ambient, long p);

/// Strata of the diagonal arrangement generated by MF(K), as set partitions (block label per vertex).
std::vector<std::vector<int>> diagonal_partitions(const SimplicialComplex& K);
/// Zero sets of the coordinate arrangement generated by MF(K), ⊥ included as 0.
std::vector<Mask> coordinate_zero_sets(const SimplicialComplex& K);

}  // namespace oracle
