#include "arrcohom/simplicial_complex.hpp"

#include "arrcohom/errors.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace arrcohom {

namespace {

void check_range(int m, const FaceSet& f)
{
    if (f.max() > m)
        throw DomainError("face " + f.to_string() + " is not a subset of [" + std::to_string(m) + "]");
}

std::vector<FaceSet> maximal_only(std::vector<FaceSet> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<FaceSet> out;
    // Sorted by size, so only later (larger) sets can contain earlier ones.
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = sets.size(); j-- > i + 1;) {
            if (sets[j].size() == sets[i].size()) break;
            if (sets[i].is_subset_of(sets[j])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(std::move(sets[i]));
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<FaceSet> facets) : m_(m), facets_(std::move(facets))
{
    if (m_ <= 64) {
        facet_masks_.reserve(facets_.size());
        for (const auto& f : facets_) facet_masks_.push_back(f.mask());
    }
}

SimplicialComplex SimplicialComplex::empty(int m) { return from_facets(m, {FaceSet{}}); }

SimplicialComplex SimplicialComplex::void_complex(int m) { return from_facets(m, {}); }

SimplicialComplex SimplicialComplex::full_simplex(int m) { return from_facets(m, {FaceSet::range(m)}); }

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<FaceSet> facets)
{
    if (m < 0) throw DomainError("vertex count must be non-negative");
    for (const auto& f : facets) check_range(m, f);
    return SimplicialComplex(m, maximal_only(std::move(facets)));
}

SimplicialComplex SimplicialComplex::from_missing_faces(int m, std::vector<FaceSet> missing)
{
    if (m < 0) throw DomainError("vertex count must be non-negative");
    if (m > 25) throw DomainError("from_missing_faces: full enumeration is limited to m <= 25");
    std::vector<std::uint64_t> masks;
    for (const auto& f : missing) {
        check_range(m, f);
        masks.push_back(f.mask());
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = 0; j < masks.size(); ++j)
            if (i != j && (masks[i] & masks[j]) == masks[i])
                throw DomainError("missing faces must form an antichain: " + FaceSet::from_mask(masks[i]).to_string() +
                                  " is contained in " + FaceSet::from_mask(masks[j]).to_string());

    const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    auto is_face = [&](std::uint64_t s) {
        for (auto mf : masks)
            if ((mf & s) == mf) return false;
        return true;
    };
    std::vector<FaceSet> facets;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (!is_face(s)) continue;
        bool maximal = true;
        for (std::uint64_t rest = full & ~s; rest != 0; rest &= rest - 1) {
            if (is_face(s | (rest & -rest))) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets.push_back(FaceSet::from_mask(s));
        if (s == full) break;
    }
    return from_facets(m, std::move(facets));
}

bool SimplicialComplex::contains(const FaceSet& face) const
{
    if (face.max() > m_) return false;
    if (!facet_masks_.empty()) {
        const auto f = face.mask();
        return std::any_of(facet_masks_.begin(), facet_masks_.end(), [f](auto s) { return (s & f) == f; });
    }
    return std::any_of(facets_.begin(), facets_.end(), [&](const FaceSet& s) { return face.is_subset_of(s); });
}

int SimplicialComplex::dimension() const
{
    if (facets_.empty()) return -2;
    return static_cast<int>(facets_.back().size()) - 1;
}

std::vector<std::vector<FaceSet>> SimplicialComplex::faces_by_dimension(int max_dim) const
{
    const int top = std::min(dimension(), max_dim);
    std::vector<std::vector<FaceSet>> out(static_cast<std::size_t>(std::max(top + 2, 0)));
    if (top < -1) return out;

    std::vector<std::unordered_set<FaceSet, FaceSetHash>> seen(out.size());
    for (const auto& facet : facets_) {
        const std::size_t n = facet.size();
        const std::size_t limit = std::min<std::size_t>(n, static_cast<std::size_t>(top + 1));
        // Enumerate subsets of the facet of size <= limit by index bitmask.
        if (n > 30) throw DomainError("faces_by_dimension: facet too large to enumerate");
        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t s = 0; s < count; ++s) {
            const auto k = static_cast<std::size_t>(std::popcount(s));
            if (k > limit) continue;
            std::vector<Vertex> v;
            v.reserve(k);
            for (std::uint64_t r = s; r != 0; r &= r - 1) v.push_back(facet[static_cast<std::size_t>(std::countr_zero(r))]);
            seen[k].insert(FaceSet(std::move(v)));
        }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].assign(seen[k].begin(), seen[k].end());
        std::sort(out[k].begin(), out[k].end());
    }
    return out;
}

std::vector<FaceSet> SimplicialComplex::faces(int max_dim) const
{
    std::vector<FaceSet> out;
    for (auto& level : faces_by_dimension(max_dim))
        for (auto& f : level) out.push_back(std::move(f));
    return out;
}

FaceSet SimplicialComplex::vertices() const
{
    FaceSet v;
    for (const auto& f : facets_) v = v.united(f);
    return v;
}

FaceSet SimplicialComplex::ghost_vertices() const { return FaceSet::range(m_).minus(vertices()); }

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& level : faces_by_dimension()) f.push_back(level.size());
    return f;
}

long long SimplicialComplex::reduced_euler_characteristic() const
{
    long long chi = 0;
    long long sign = -1;  // dimension -1
    for (auto n : f_vector()) {
        chi += sign * static_cast<long long>(n);
        sign = -sign;
    }
    return chi;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const
{
    if (m_ > other.m_) return false;
    return std::all_of(facets_.begin(), facets_.end(), [&](const FaceSet& f) { return other.contains(f); });
}

FaceSet LabeledComplex::to_original(const FaceSet& face) const
{
    std::vector<Vertex> v;
    v.reserve(face.size());
    for (Vertex i : face) v.push_back(labels.at(static_cast<std::size_t>(i - 1)));
    return FaceSet(std::move(v));
}

}  // namespace arrcohom
