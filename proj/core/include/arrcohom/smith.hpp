#pragma once

#include "arrcohom/integer_matrix.hpp"

#include <vector>

namespace arrcohom {

/**
 * D = U · A · V with D diagonal, d_1 | d_2 | ... | d_r > 0 followed by zeros,
 * and U, V unimodular. The inverses are kept because homology class
 * coordinates need V⁻¹ and generators need U⁻¹ of a second decomposition.
 */
struct SmithDecomposition {
    IntegerMatrix D;
    IntegerMatrix U;
    IntegerMatrix V;
    IntegerMatrix U_inverse;
    IntegerMatrix V_inverse;
    std::size_t rank = 0;

    /// The nonzero diagonal entries d_1, ..., d_rank.
    std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& A);

/// Nonzero invariant factors only (no transforms); count = rank.
std::vector<Integer> invariant_factors(const IntegerMatrix& A);

/**
 * Nonzero invariant factors of a sparse matrix. Unit pivots are eliminated
 * sparsely (Markowitz order, checked int64 arithmetic); the remaining block
 * goes through the dense algorithm. Falls back to arbitrary precision on
 * int64 overflow.
 */
std::vector<Integer> invariant_factors(const SparseMatrix& A);

}  // namespace arrcohom
