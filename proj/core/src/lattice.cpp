#include "arrcohom/lattice.hpp"

#include "arrcohom/complex_ops.hpp"
#include "arrcohom/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace arrcohom {

const char* to_string(Ambient a) { return a == Ambient::Complex ? "complex" : "real"; }
const char* to_string(ArrangementKind k) { return k == ArrangementKind::Diagonal ? "diagonal" : "coordinate"; }

Ambient parse_ambient(const std::string& s)
{
    if (s == "complex") return Ambient::Complex;
    if (s == "real") return Ambient::Real;
    throw MalformedInput("ambient must be 'real' or 'complex', got '" + s + "'");
}

ArrangementKind parse_arrangement(const std::string& s)
{
    if (s == "diagonal") return ArrangementKind::Diagonal;
    if (s == "coordinate") return ArrangementKind::Coordinate;
    throw MalformedInput("arrangement must be 'diagonal' or 'coordinate', got '" + s + "'");
}

std::string Stratum::to_string(ArrangementKind kind) const
{
    if (blocks.empty()) return "⊥";
    std::string out = kind == ArrangementKind::Diagonal ? "D" : "C";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += "|";
        out += blocks[i].to_string();
    }
    return out;
}

namespace {

void sort_blocks(std::vector<FaceSet>& blocks)
{
    std::sort(blocks.begin(), blocks.end(), [](const FaceSet& a, const FaceSet& b) { return a.min() < b.min(); });
}

std::vector<FaceSet> coordinate_join(const std::vector<FaceSet>& u, const std::vector<FaceSet>& v)
{
    if (u.empty()) return v;
    if (v.empty()) return u;
    return {u.front().united(v.front())};
}

int stratum_dimension(ArrangementKind kind, Ambient ambient, int m, const std::vector<FaceSet>& blocks)
{
    int dim = m;
    for (const auto& b : blocks)
        dim -= kind == ArrangementKind::Diagonal ? static_cast<int>(b.size()) - 1 : static_cast<int>(b.size());
    return ambient == Ambient::Complex ? 2 * dim : dim;
}

bool blocks_leq(ArrangementKind kind, const std::vector<FaceSet>& u, const std::vector<FaceSet>& v)
{
    if (kind == ArrangementKind::Coordinate) return u.empty() || (!v.empty() && u.front().is_subset_of(v.front()));
    return std::all_of(u.begin(), u.end(), [&](const FaceSet& b) {
        return std::any_of(v.begin(), v.end(), [&](const FaceSet& c) { return b.is_subset_of(c); });
    });
}

}  // namespace

std::vector<FaceSet> diagonal_join(const std::vector<FaceSet>& u, const std::vector<FaceSet>& v)
{
    std::vector<FaceSet> blocks = u;
    for (const auto& b : v) {
        FaceSet merged = b;
        std::vector<FaceSet> rest;
        for (auto& c : blocks) {
            if (c.intersects(merged)) merged = merged.united(c);
            else rest.push_back(std::move(c));
        }
        rest.push_back(std::move(merged));
        blocks = std::move(rest);
    }
    sort_blocks(blocks);
    return blocks;
}

IntersectionLattice build_lattice(ArrangementKind kind, Ambient ambient, int m,
                                  std::vector<std::vector<FaceSet>> generators)
{
    auto join = [kind](const std::vector<FaceSet>& a, const std::vector<FaceSet>& b) {
        return kind == ArrangementKind::Diagonal ? diagonal_join(a, b) : coordinate_join(a, b);
    };
    std::set<std::vector<FaceSet>> seen{{}};
    std::vector<std::vector<FaceSet>> frontier;
    for (auto& g : generators)
        if (seen.insert(g).second) frontier.push_back(g);
    generators.assign(frontier.begin(), frontier.end());
    while (!frontier.empty()) {
        std::vector<std::vector<FaceSet>> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                auto y = join(x, g);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }

    IntersectionLattice L;
    L.kind_ = kind;
    L.ambient_ = ambient;
    L.m_ = m;
    for (const auto& blocks : seen) L.elements_.push_back({blocks, stratum_dimension(kind, ambient, m, blocks)});
    std::stable_sort(L.elements_.begin(), L.elements_.end(), [](const Stratum& a, const Stratum& b) {
        if (a.dimension != b.dimension) return a.dimension > b.dimension;
        return a.blocks < b.blocks;
    });
    const std::size_t n = L.elements_.size();
    L.leq_.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        L.index_.emplace(L.elements_[i].blocks, i);
        for (std::size_t j = 0; j < n; ++j)
            L.leq_[i][j] = blocks_leq(kind, L.elements_[i].blocks, L.elements_[j].blocks) ? 1 : 0;
    }
    return L;
}

std::size_t IntersectionLattice::join(std::size_t u, std::size_t v) const
{
    const auto& a = elements_.at(u).blocks;
    const auto& b = elements_.at(v).blocks;
    auto blocks = kind_ == ArrangementKind::Diagonal ? diagonal_join(a, b) : coordinate_join(a, b);
    auto it = index_.find(blocks);
    if (it == index_.end()) throw IntegrityError("lattice is not closed under intersection");
    return it->second;
}

std::optional<std::size_t> IntersectionLattice::index_of(const std::vector<FaceSet>& blocks) const
{
    auto canonical = blocks;
    sort_blocks(canonical);
    auto it = index_.find(canonical);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionLattice::hasse_edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!less(u, v)) continue;
            bool cover = true;
            for (std::size_t w = u + 1; w < v && cover; ++w)
                if (less(u, w) && less(w, v)) cover = false;
            if (cover) out.emplace_back(u, v);
        }
    return out;
}

std::vector<std::size_t> IntersectionLattice::open_interval(std::size_t u) const
{
    if (u >= size()) throw DomainError("stratum index " + std::to_string(u) + " is not in the lattice");
    std::vector<std::size_t> out;
    for (std::size_t w = 1; w < u; ++w)
        if (less(w, u)) out.push_back(w);
    return out;
}

std::string IntersectionLattice::to_json() const
{
    nlohmann::ordered_json j;
    j["arrangement"] = arrcohom::to_string(kind_);
    j["ambient"] = arrcohom::to_string(ambient_);
    j["m"] = m_;
    j["N"] = ambient_dimension();
    auto strata = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < size(); ++i) {
        nlohmann::ordered_json s;
        s["index"] = i;
        s["label"] = elements_[i].to_string(kind_);
        auto blocks = nlohmann::ordered_json::array();
        for (const auto& b : elements_[i].blocks) blocks.push_back(b.vertices());
        s["blocks"] = blocks;
        s["d"] = elements_[i].dimension;
        strata.push_back(std::move(s));
    }
    j["strata"] = std::move(strata);
    auto hasse = nlohmann::ordered_json::array();
    for (auto [u, v] : hasse_edges()) hasse.push_back({u, v});
    j["hasse"] = std::move(hasse);
    return j.dump(2);
}

std::vector<FaceSet> non_faces(const SimplicialComplex& K)
{
    const int m = K.vertex_count();
    if (m > 25) throw DomainError("non_faces: enumeration is limited to m <= 25");
    std::vector<FaceSet> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        auto f = FaceSet::from_mask(s);
        if (!K.contains(f)) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<FaceSet> generator_sets(const SimplicialComplex& K, LatticeGenerators generators)
{
    if (K.is_void()) throw DomainError("the void complex does not determine an arrangement");
    return generators == LatticeGenerators::MissingFaces ? missing_faces(K) : non_faces(K);
}

}  // namespace

IntersectionLattice diagonal_lattice(const SimplicialComplex& K, Ambient ambient, LatticeGenerators generators)
{
    if (K.has_ghost_vertices())
        throw DomainError("diagonal arrangements require a complex without ghost vertices; ghost vertices: " +
                          K.ghost_vertices().to_string());
    std::vector<std::vector<FaceSet>> gens;
    for (auto& I : generator_sets(K, generators)) gens.push_back({std::move(I)});
    return build_lattice(ArrangementKind::Diagonal, ambient, K.vertex_count(), std::move(gens));
}

IntersectionLattice coordinate_lattice(const SimplicialComplex& K, Ambient ambient, LatticeGenerators generators)
{
    std::vector<std::vector<FaceSet>> gens;
    for (auto& I : generator_sets(K, generators)) gens.push_back({std::move(I)});
    return build_lattice(ArrangementKind::Coordinate, ambient, K.vertex_count(), std::move(gens));
}

IntersectionLattice arrangement_lattice(const SimplicialComplex& K, ArrangementKind kind, Ambient ambient,
                                        LatticeGenerators generators)
{
    return kind == ArrangementKind::Diagonal ? diagonal_lattice(K, ambient, generators)
                                             : coordinate_lattice(K, ambient, generators);
}

DualIsomorphism lattice_isomorphic_to_dual(const SimplicialComplex& K)
{
    if (!common_vertex_predicate(K))
        throw DomainError("lattice_isomorphic_to_dual requires every two missing faces to share a vertex");
    const auto L = diagonal_lattice(K, Ambient::Complex, LatticeGenerators::AllNonFaces);
    const auto dual = alexander_dual(K);
    const FaceSet all = FaceSet::range(K.vertex_count());

    DualIsomorphism out;
    out.strata = L.size();
    out.dual_faces = dual.is_void() ? 0 : dual.faces().size();
    bool ok = L.size() == out.dual_faces + 1;
    for (std::size_t u = 1; u < L.size(); ++u) {
        const auto& blocks = L[u].blocks;
        if (blocks.size() != 1 || K.contains(blocks.front())) {
            ok = false;
            continue;
        }
        FaceSet hat = all.minus(blocks.front());
        if (!dual.contains(hat)) ok = false;
        out.mapping.emplace_back(u, std::move(hat));
    }
    for (std::size_t a = 0; ok && a < out.mapping.size(); ++a)
        for (std::size_t b = 0; b < out.mapping.size(); ++b) {
            const bool order = L.leq(out.mapping[a].first, out.mapping[b].first);
            const bool reverse_inclusion = out.mapping[b].second.is_subset_of(out.mapping[a].second);
            if (order != reverse_inclusion) {
                ok = false;
                break;
            }
        }
    out.isomorphic = ok;
    return out;
}

}  // namespace arrcohom
