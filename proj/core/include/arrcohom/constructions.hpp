#pragma once

#include "arrcohom/gm_cohomology.hpp"
#include "arrcohom/graded_group.hpp"
#include "arrcohom/simplicial_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrcohom {

/**
 * If some (m-1)-subset [m] \ {v} is a face of L, returns K = link_L({v})
 * relabeled onto [m-1] (largest such v), so that D(L) and U(K) agree.
 * Returns nullopt otherwise. Throws DomainError if L has ghost vertices.
 */
std::optional<LabeledComplex> realize_as_coordinate(const SimplicialComplex& L);

/// One wedge summand Σ^{|I|+1}|K_I| of the stable splitting of U(K).
struct BbcgSummand {
    FaceSet subset;
    GradedAbelianGroup reduced_homology;  ///< H̃_*(K_I) shifted up by |I|+1
};

/// Nonzero summands over nonempty I ⊆ [m], shortlex in I.
std::vector<BbcgSummand> bbcg_summands(const SimplicialComplex& K, unsigned jobs = 1);

/// Z in degree 0 plus the cohomology of every summand.
GradedAbelianGroup bbcg_cohomology(const std::vector<BbcgSummand>& summands);

struct WedgeTerm {
    /// Sphere dimension when the summand's reduced homology is Z in one degree; otherwise nullopt.
    std::optional<int> sphere;
    std::size_t multiplicity = 0;
    GradedAbelianGroup reduced_homology;  ///< of a single copy
    std::vector<FaceSet> subsets;
    std::string label;  ///< "(S^5)^{∨10}", "S^7", "Σ^7|K_{1,2,3,4,5,6}|"
};

/// Spheres grouped by dimension (ascending), followed by the other summands in shortlex order of I.
std::vector<WedgeTerm> wedge_summary(const std::vector<BbcgSummand>& summands);
/// Terms joined by " ∨ "; "pt" for an empty wedge.
std::string render_wedge(const std::vector<WedgeTerm>& terms);

struct KEqualReport {
    int m = 0;
    int k = 0;
    Ambient ambient = Ambient::Complex;
    bool in_range = false;  ///< k < m < 2k
    /// The published closed form; absent outside the stated range.
    std::optional<GradedAbelianGroup> closed_form;
    /// The wedge-of-spheres decomposition of U(sk^{k-2}Δ^m), desuspended (twice complex, once real).
    GradedAbelianGroup wedge;
    /// The lattice sum for D(sk^{k-2}Δ^m).
    GradedAbelianGroup gm;
    bool wedge_matches_gm = false;
    std::optional<bool> closed_form_matches_gm;
    /// Complex ambient, in range: the printed coefficient disagrees with the wedge path.
    bool closed_form_discrepancy = false;
    std::vector<std::string> notes;
};

/// Throws DomainError unless 2 <= k <= m.
KEqualReport kequal_closed_form(int m, int k, Ambient ambient, const GmOptions& options = {});

struct DegreeComparison {
    int degree = 0;  ///< degree of the left-hand side
    AbelianGroup lhs;
    AbelianGroup rhs;
    bool match = false;
};

struct RelationCheck {
    std::string relation;
    std::vector<DegreeComparison> rows;
    bool match = true;
};

/**
 * Compares H̃^q(U(K)) with H̃^{q-2}(D(K)) and H̃^q(U_R(K)) with H̃^{q-1}(D_R(K)).
 * Throws DomainError unless every two missing faces share a vertex.
 */
std::vector<RelationCheck> suspension_relation_check(const SimplicialComplex& K, const GmOptions& options = {});

/// Compares H^*(U(K)) with H^*(D(L)), L = cone_extension(K), for complex and real ambient.
std::vector<RelationCheck> cone_equivalence_check(const SimplicialComplex& K, const GmOptions& options = {});

struct NeighbourlinessReport {
    int dimension = 0;
    /// Largest j with every (j+1)-subset of [m] a face; -1 if some vertex is a ghost.
    int neighbourly = 0;
    int half_dimension = 0;  ///< ⌈dim / 2⌉
    bool half_neighbourly = false;
};

NeighbourlinessReport neighbourliness(const SimplicialComplex& K);

}  // namespace arrcohom
