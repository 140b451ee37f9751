#pragma once

#include "arrcohom/face_set.hpp"

#include <climits>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace arrcohom {

/**
 * An abstract simplicial complex on the vertex set [m] = {1, ..., m}, stored
 * by its facets.
 *
 * Vertices i with {i} not a face are ghost vertices; they are allowed here
 * (Alexander duals and coordinate-side complexes need them). Faces are
 * enumerated lazily from the facet list.
 *
 * The empty complex {∅} has the single facet ∅ and is a valid complex. The
 * void complex (no faces at all, not even ∅) only arises as the Alexander
 * dual of a full simplex; is_void() reports it.
 */
class SimplicialComplex {
public:
    /// The complex {∅} on [m].
    static SimplicialComplex empty(int m);
    /// The complex with no faces on [m].
    static SimplicialComplex void_complex(int m);
    /// All subsets of [m].
    static SimplicialComplex full_simplex(int m);
    /// Non-maximal and duplicate facets are dropped. An empty list gives the void complex.
    static SimplicialComplex from_facets(int m, std::vector<FaceSet> facets);
    /**
     * The largest complex on [m] whose minimal non-faces are exactly `missing`.
     * Throws DomainError if `missing` is not an antichain (some listed set
     * contains another) or if m > 25.
     */
    static SimplicialComplex from_missing_faces(int m, std::vector<FaceSet> missing);

    int vertex_count() const { return m_; }
    /// Facets in shortlex order.
    const std::vector<FaceSet>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }

    bool contains(const FaceSet& face) const;
    /// -1 for {∅}; -2 for the void complex.
    int dimension() const;

    /// All faces (including ∅) of dimension <= max_dim, shortlex order.
    std::vector<FaceSet> faces(int max_dim = INT_MAX) const;
    /// Entry d+1 holds the d-dimensional faces, d = -1 .. min(dimension, max_dim).
    std::vector<std::vector<FaceSet>> faces_by_dimension(int max_dim = INT_MAX) const;

    FaceSet vertices() const;
    FaceSet ghost_vertices() const;
    bool has_ghost_vertices() const { return !ghost_vertices().empty(); }

    /// f[d+1] = number of d-dimensional faces, starting at d = -1.
    std::vector<std::size_t> f_vector() const;
    /// Σ (-1)^d f_d over d >= -1.
    long long reduced_euler_characteristic() const;

    /// Y ⊆ X with vertex_count(Y) <= vertex_count(X).
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.m_ == b.m_ && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex(int m, std::vector<FaceSet> facets);

    int m_ = 0;
    std::vector<FaceSet> facets_;
    std::vector<std::uint64_t> facet_masks_;  // populated when m <= 64
};

/**
 * A complex whose vertex i (1-based) stands for labels[i-1] of some other
 * complex. Returned by link and full_subcomplex so results can be pulled back.
 */
struct LabeledComplex {
    SimplicialComplex complex;
    std::vector<Vertex> labels;

    FaceSet to_original(const FaceSet& face) const;
};

}  // namespace arrcohom
