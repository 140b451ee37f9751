#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace arrcohom {

/// Vertex labels are 1-based.
using Vertex = int;

/**
 * A finite set of vertices stored as a strictly increasing sequence.
 *
 * Faces, missing faces and vertex subsets J of [m] are all FaceSets. The
 * ordering is shortlex (cardinality first, then lexicographic), which is
 * the order every enumeration in the library reports in.
 */
class FaceSet {
public:
    FaceSet() = default;
    /// Sorts the input; throws DomainError on duplicates or labels < 1.
    explicit FaceSet(std::vector<Vertex> vertices);
    FaceSet(std::initializer_list<Vertex> vertices);

    /// Bit i-1 of `mask` set means vertex i is present.
    static FaceSet from_mask(std::uint64_t mask);
    /// Vertices 1..n.
    static FaceSet range(int n);

    /// Requires max() <= 64.
    std::uint64_t mask() const;

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    Vertex max() const { return vertices_.empty() ? 0 : vertices_.back(); }
    Vertex min() const { return vertices_.empty() ? 0 : vertices_.front(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    bool contains(Vertex v) const;
    bool is_subset_of(const FaceSet& other) const;
    bool intersects(const FaceSet& other) const;

    FaceSet united(const FaceSet& other) const;
    FaceSet intersected(const FaceSet& other) const;
    FaceSet minus(const FaceSet& other) const;
    FaceSet with(Vertex v) const;
    FaceSet without(Vertex v) const;

    /// "{1,3}" style rendering; the empty set renders as "{}".
    std::string to_string() const;

    friend bool operator==(const FaceSet&, const FaceSet&) = default;
    friend std::strong_ordering operator<=>(const FaceSet& a, const FaceSet& b);

private:
    struct Sorted {};
    FaceSet(Sorted, std::vector<Vertex> v) : vertices_(std::move(v)) {}

    std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& os, const FaceSet& f);

struct FaceSetHash {
    std::size_t operator()(const FaceSet& f) const noexcept;
};

}  // namespace arrcohom
