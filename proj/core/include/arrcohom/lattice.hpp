#pragma once

#include "arrcohom/simplicial_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arrcohom {

enum class Ambient { Real, Complex };
enum class ArrangementKind { Diagonal, Coordinate };

/// Which subspaces seed the intersection closure.
enum class LatticeGenerators {
    MissingFaces,  ///< one subspace per minimal non-face (smallest lattice, same complement)
    AllNonFaces,   ///< one subspace per non-face
};

const char* to_string(Ambient a);
const char* to_string(ArrangementKind k);
Ambient parse_ambient(const std::string& s);
ArrangementKind parse_arrangement(const std::string& s);

/**
 * One element of an intersection lattice.
 *
 * Diagonal: pairwise-disjoint blocks of size >= 2, sorted by minimum; the
 * subspace sets all coordinates of each block equal. Coordinate: at most one
 * block, the zero set. ⊥ (the ambient space) has no blocks.
 */
struct Stratum {
    std::vector<FaceSet> blocks;
    int dimension = 0;  ///< real dimension

    /// "⊥", "D{1,2,3}", "D{1,3}|{2,4}", "C{1,3}".
    std::string to_string(ArrangementKind kind) const;
};

/**
 * The intersection poset of a diagonal or coordinate arrangement, ordered by
 * reverse inclusion. Elements are indexed in a linear extension: decreasing
 * dimension, ties broken by canonical blocks, so index 0 is ⊥ and u < v
 * implies index(u) < index(v).
 */
class IntersectionLattice {
public:
    static constexpr std::size_t bottom = 0;

    ArrangementKind kind() const { return kind_; }
    Ambient ambient() const { return ambient_; }
    int vertex_count() const { return m_; }
    /// N: real dimension of the ambient space.
    int ambient_dimension() const { return ambient_ == Ambient::Complex ? 2 * m_ : m_; }

    std::size_t size() const { return elements_.size(); }
    const Stratum& operator[](std::size_t i) const { return elements_.at(i); }
    const std::vector<Stratum>& strata() const { return elements_; }
    int d(std::size_t i) const { return elements_.at(i).dimension; }

    /// u <= v, i.e. the subspace v is contained in u.
    bool leq(std::size_t u, std::size_t v) const { return leq_.at(u).at(v) != 0; }
    bool less(std::size_t u, std::size_t v) const { return u != v && leq(u, v); }
    /// Subspace intersection u ∩ v.
    std::size_t join(std::size_t u, std::size_t v) const;
    std::optional<std::size_t> index_of(const std::vector<FaceSet>& blocks) const;

    /// Cover relations (u, v) with u < v and nothing in between.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
    /// Elements w with ⊥ < w < u, ascending.
    std::vector<std::size_t> open_interval(std::size_t u) const;

    /// {"arrangement","ambient","m","N","strata":[{"index","label","blocks","d"}],"hasse":[[u,v],...]}
    std::string to_json() const;

private:
    friend IntersectionLattice build_lattice(ArrangementKind, Ambient, int, std::vector<std::vector<FaceSet>>);

    ArrangementKind kind_ = ArrangementKind::Diagonal;
    Ambient ambient_ = Ambient::Complex;
    int m_ = 0;
    std::vector<Stratum> elements_;
    std::vector<std::vector<char>> leq_;
    std::map<std::vector<FaceSet>, std::size_t> index_;
};

/// Canonical blocks of the subspace u ∩ v (diagonal: merge overlapping blocks).
std::vector<FaceSet> diagonal_join(const std::vector<FaceSet>& u, const std::vector<FaceSet>& v);

/// Throws DomainError if K has ghost vertices or is the void complex.
IntersectionLattice diagonal_lattice(const SimplicialComplex& K, Ambient ambient,
                                     LatticeGenerators generators = LatticeGenerators::MissingFaces);

/// Throws DomainError for the void complex.
IntersectionLattice coordinate_lattice(const SimplicialComplex& K, Ambient ambient,
                                       LatticeGenerators generators = LatticeGenerators::MissingFaces);

IntersectionLattice arrangement_lattice(const SimplicialComplex& K, ArrangementKind kind, Ambient ambient,
                                        LatticeGenerators generators = LatticeGenerators::MissingFaces);

/// Every non-face of K, shortlex. Requires m <= 25.
std::vector<FaceSet> non_faces(const SimplicialComplex& K);

struct DualIsomorphism {
    bool isomorphic = false;
    std::size_t strata = 0;      ///< including ⊥
    std::size_t dual_faces = 0;  ///< faces of K̂, including ∅
    /// (stratum index, Î = [m] \ I) for every stratum D_I other than ⊥.
    std::vector<std::pair<std::size_t, FaceSet>> mapping;
};

/**
 * Checks that the diagonal lattice generated by all non-faces is the face
 * poset of K̂ under reverse inclusion (with ⊥ adjoined), via D_I ↦ [m] \ I.
 * Throws DomainError unless common_vertex_predicate(K).
 */
DualIsomorphism lattice_isomorphic_to_dual(const SimplicialComplex& K);

}  // namespace arrcohom
