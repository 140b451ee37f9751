#pragma once

#include "arrcohom/simplicial_complex.hpp"

#include <string>
#include <string_view>

namespace arrcohom {

/**
 * Parses {"m": int, "facets": [[...], ...]} or
 * {"m": int, "missing_faces": [[...], ...]}. Throws MalformedInput on bad JSON,
 * wrong field types, both/neither face lists, or labels outside [m]; throws
 * DomainError when a missing-face list is not an antichain.
 */
SimplicialComplex parse_complex_json(std::string_view text);

SimplicialComplex read_complex_file(const std::string& path);

/// {"facets":[..],"m":..} with facets in shortlex order; stable byte-for-byte.
std::string canonical_complex_json(const SimplicialComplex& K);

/// Hex SHA-256 of canonical_complex_json(K).
std::string canonical_hash(const SimplicialComplex& K);

}  // namespace arrcohom
