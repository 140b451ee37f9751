#pragma once

#include "arrcohom/graded_group.hpp"
#include "arrcohom/lattice.hpp"

#include <optional>

namespace arrcohom {

struct GmOptions {
    /// Highest cohomological degree reported; defaults to N.
    std::optional<int> max_q;
    unsigned jobs = 1;
    /// Also compute H_*(ΔΔ[⊥,u]) from the pair of order complexes and require agreement.
    bool pair_oracle = false;
};

/// The part of the cohomology contributed by one stratum.
struct StratumTerm {
    std::size_t stratum = 0;
    GradedAbelianGroup cohomology;
};

struct GmResult {
    GradedAbelianGroup cohomology;
    std::vector<StratumTerm> terms;  ///< nonzero contributions only, by stratum index
};

/**
 * H^q(M) = ⊕_u H_{N-d(u)-q}(ΔΔ[⊥,u]) over the lattice, with ⊥ giving Z in
 * degree 0 and H_k(ΔΔ[⊥,u]) computed as H̃_{k-2}(Δ(⊥,u)) for u > ⊥.
 * With pair_oracle, a mismatch against the pair computation throws
 * OracleMismatch. For complex diagonal lattices, a nonzero group above
 * degree N-2 throws IntegrityError.
 */
GmResult gm_terms(const IntersectionLattice& L, const GmOptions& options = {});
GradedAbelianGroup gm_cohomology(const IntersectionLattice& L, const GmOptions& options = {});

/// H*(D(K)) or H*(D_R(K)) by the lattice sum. Throws DomainError on ghost vertices.
GradedAbelianGroup diagonal_cohomology(const SimplicialComplex& K, Ambient ambient, const GmOptions& options = {});

/// H*(U(K)) or H*(U_R(K)) by the lattice sum.
GradedAbelianGroup coordinate_cohomology(const SimplicialComplex& K, Ambient ambient, const GmOptions& options = {});

/**
 * H*(D(K)) as Z in degree 0 plus, for each face Î of K̂ (Î = ∅ included),
 * H̃_j(link Î) in degree c(|I|-1) - 2 - j where |I| = m - |Î| and c = 2 for
 * complex, 1 for real ambient. Throws DomainError unless every two missing
 * faces share a vertex, or on ghost vertices.
 */
GradedAbelianGroup diagonal_cohomology_via_links(const SimplicialComplex& K, Ambient ambient = Ambient::Complex,
                                                 const GmOptions& options = {});

/**
 * H*(D(K)) as Z in degree 0 plus, for each non-face I, H̃^p(K_I) in degree
 * p + (c-1)(|I|-1). Same preconditions as the link formula.
 */
GradedAbelianGroup diagonal_cohomology_via_subcomplexes(const SimplicialComplex& K, Ambient ambient = Ambient::Complex,
                                                        const GmOptions& options = {});

/// H*(U(K)) as ⊕_{I ⊆ [m]} H̃^p(K_I) in degree p + (c-1)|I| + 1 (I = ∅ gives Z in degree 0).
GradedAbelianGroup coordinate_cohomology_hochster(const SimplicialComplex& K, Ambient ambient,
                                                  const GmOptions& options = {});

/// Cohomology with H^0 reduced by one copy of Z (the complement is nonempty).
GradedAbelianGroup reduced_part(const GradedAbelianGroup& cohomology);

}  // namespace arrcohom
