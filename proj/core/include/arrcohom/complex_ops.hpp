#pragma once

#include "arrcohom/simplicial_complex.hpp"

#include <vector>

namespace arrcohom {

/// Minimal non-faces MF(K), shortlex order.
std::vector<FaceSet> missing_faces(const SimplicialComplex& K);

/// True iff every two missing faces of K share a vertex (vacuously true for fewer than two).
bool common_vertex_predicate(const SimplicialComplex& K);

/**
 * link_K(I) = {J ∈ K : I ∪ J ∈ K, I ∩ J = ∅}, as a complex on [m] \ I
 * relabeled order-preservingly to [m - |I|]. Throws DomainError if I ∉ K.
 */
LabeledComplex link(const SimplicialComplex& K, const FaceSet& I);

/// K_J = {I ∈ K : I ⊆ J}, relabeled order-preservingly to [|J|].
LabeledComplex full_subcomplex(const SimplicialComplex& K, const FaceSet& J);

/// K̂ = {I ⊆ [m] : [m] \ I ∉ K}. Its facets are the complements of MF(K).
SimplicialComplex alexander_dual(const SimplicialComplex& K);

/// K1 * K2 on [m1 + m2]; vertex i of K2 becomes m1 + i.
SimplicialComplex join_complex(const SimplicialComplex& K1, const SimplicialComplex& K2);

/// Faces of K with at most d + 1 vertices. Requires d >= -1.
SimplicialComplex skeleton(const SimplicialComplex& K, int d);

/// Σ K = K * S⁰, the two suspension points being m + 1 and m + 2.
SimplicialComplex suspension(const SimplicialComplex& K);

/**
 * The complex L on [m + 1] made of the full simplex on [m] and the cone over
 * K with apex m + 1. The non-faces of L are exactly I ∪ {m + 1} for I ∉ K.
 */
SimplicialComplex cone_extension(const SimplicialComplex& K);

/// Applies the vertex permutation i -> perm[i-1] (perm is a permutation of [m]).
SimplicialComplex permuted(const SimplicialComplex& K, const std::vector<Vertex>& perm);

/// A subdivision-like complex whose vertex i stands for the face vertex_faces[i-1] of an original complex.
struct FaceVertexComplex {
    SimplicialComplex complex;
    std::vector<FaceSet> vertex_faces;
};

/// Vertices are the nonempty faces of K in shortlex order; faces are chains under inclusion.
FaceVertexComplex barycentric_subdivision(const SimplicialComplex& K);

/**
 * The full subcomplex Z of the barycentric subdivision X' on the vertices
 * (faces of X) that do not belong to Y. |Z| is homotopy equivalent to
 * |X| \ |Y|. Throws DomainError unless Y is a subcomplex of X.
 */
FaceVertexComplex complement_model(const SimplicialComplex& X, const SimplicialComplex& Y);

}  // namespace arrcohom
