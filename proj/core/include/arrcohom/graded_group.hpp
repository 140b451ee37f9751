#pragma once

#include "arrcohom/integer_matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace arrcohom {

/// Z^rank ⊕ Z_{t_1} ⊕ ... ⊕ Z_{t_k} with t_i >= 2 and t_1 | t_2 | ... | t_k.
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    /// Normalizes arbitrary cyclic orders into invariant-factor form (units dropped).
    static AbelianGroup make(std::size_t rank, std::vector<Integer> cyclic_orders);

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    /// Number of cyclic summands (free first, then torsion).
    std::size_t summands() const { return rank + torsion.size(); }
    /// "0", "Z", "Z^10", "Z_2", "Z^3 ⊕ Z_2^2 ⊕ Z_4".
    std::string to_string() const;

    AbelianGroup& operator+=(const AbelianGroup& other);

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// A representative chain, as coefficients over the basis of the chain group it lives in.
using ChainVector = std::vector<Integer>;

/**
 * Finitely generated abelian groups indexed by degree. Only nonzero degrees
 * are stored. Generator representatives are optional and ignored by ==.
 */
class GradedAbelianGroup {
public:
    const AbelianGroup& operator[](int degree) const;
    void add(int degree, const AbelianGroup& group);
    void set(int degree, AbelianGroup group);

    /// Degrees with nonzero groups, ascending.
    std::vector<int> degrees() const;
    bool is_zero() const { return groups_.empty(); }
    const std::map<int, AbelianGroup>& groups() const { return groups_; }

    /// Every degree moved by +shift.
    GradedAbelianGroup shifted(int shift) const;
    /// Keeps degrees in [lo, hi].
    GradedAbelianGroup truncated(int lo, int hi) const;
    GradedAbelianGroup& operator+=(const GradedAbelianGroup& other);

    void set_generators(int degree, std::vector<ChainVector> chains);
    /// Empty unless the producer was asked for generators.
    const std::vector<ChainVector>& generators(int degree) const;

    /// "H^0 = Z, H^3 = Z^10" with the given symbol; "0" when everything vanishes.
    std::string render(const std::string& symbol) const;

    friend bool operator==(const GradedAbelianGroup& a, const GradedAbelianGroup& b) { return a.groups_ == b.groups_; }

private:
    std::map<int, AbelianGroup> groups_;
    std::map<int, std::vector<ChainVector>> generators_;
};

}  // namespace arrcohom
