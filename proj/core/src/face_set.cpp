#include "arrcohom/face_set.hpp"

#include "arrcohom/errors.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <ostream>

namespace arrcohom {

FaceSet::FaceSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw DomainError("FaceSet: repeated vertex");
    if (!vertices_.empty() && vertices_.front() < 1)
        throw DomainError("FaceSet: vertex labels start at 1");
}

FaceSet::FaceSet(std::initializer_list<Vertex> vertices) : FaceSet(std::vector<Vertex>(vertices)) {}

FaceSet FaceSet::from_mask(std::uint64_t mask)
{
    std::vector<Vertex> v;
    v.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        v.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return FaceSet(Sorted{}, std::move(v));
}

FaceSet FaceSet::range(int n)
{
    std::vector<Vertex> v(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return FaceSet(Sorted{}, std::move(v));
}

std::uint64_t FaceSet::mask() const
{
    if (max() > 64) throw DomainError("FaceSet::mask: vertex label exceeds 64");
    std::uint64_t m = 0;
    for (Vertex v : vertices_) m |= std::uint64_t{1} << (v - 1);
    return m;
}

bool FaceSet::contains(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool FaceSet::is_subset_of(const FaceSet& other) const
{
    return size() <= other.size() &&
           std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

bool FaceSet::intersects(const FaceSet& other) const
{
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a;
        else ++b;
    }
    return false;
}

FaceSet FaceSet::united(const FaceSet& other) const
{
    std::vector<Vertex> out;
    out.reserve(size() + other.size());
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                   std::back_inserter(out));
    return FaceSet(Sorted{}, std::move(out));
}

FaceSet FaceSet::intersected(const FaceSet& other) const
{
    std::vector<Vertex> out;
    std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                          std::back_inserter(out));
    return FaceSet(Sorted{}, std::move(out));
}

FaceSet FaceSet::minus(const FaceSet& other) const
{
    std::vector<Vertex> out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(out));
    return FaceSet(Sorted{}, std::move(out));
}

FaceSet FaceSet::with(Vertex v) const
{
    if (v < 1) throw DomainError("FaceSet: vertex labels start at 1");
    if (contains(v)) return *this;
    std::vector<Vertex> out = vertices_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return FaceSet(Sorted{}, std::move(out));
}

FaceSet FaceSet::without(Vertex v) const
{
    std::vector<Vertex> out = vertices_;
    out.erase(std::remove(out.begin(), out.end(), v), out.end());
    return FaceSet(Sorted{}, std::move(out));
}

std::string FaceSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vertices_[i]);
    }
    return s + "}";
}

std::strong_ordering operator<=>(const FaceSet& a, const FaceSet& b)
{
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.vertices_ <=> b.vertices_;
}

std::ostream& operator<<(std::ostream& os, const FaceSet& f) { return os << f.to_string(); }

std::size_t FaceSetHash::operator()(const FaceSet& f) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ull ^ f.size();
    for (Vertex v : f) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
}

}  // namespace arrcohom
