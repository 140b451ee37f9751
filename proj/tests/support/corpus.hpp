#pragma once

#include "arrcohom/simplicial_complex.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace corpus {

using arrcohom::SimplicialComplex;

/// Every complex on exactly [m] (ghost vertices allowed, void excluded), one per isomorphism class. m <= 5.
std::vector<SimplicialComplex> up_to_isomorphism(int m);

/// Union of up_to_isomorphism(1..max_m).
std::vector<SimplicialComplex> exhaustive(int max_m);

/// Random facets of random sizes; may have ghost vertices, never void.
SimplicialComplex random_complex(std::mt19937_64& rng, int m);

/// No ghost vertices, pairwise-intersecting missing faces.
SimplicialComplex random_common_vertex(std::mt19937_64& rng, int m);

/// Keeps complexes without ghost vertices whose missing faces pairwise intersect.
std::vector<SimplicialComplex> common_vertex_only(const std::vector<SimplicialComplex>& all);

/// Number of orbits reported in the literature for monotone Boolean functions, minus the void complex.
std::size_t expected_isomorphism_classes(int m);

SimplicialComplex rp2();
SimplicialComplex square();

}  // namespace corpus
