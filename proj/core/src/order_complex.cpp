#include "arrcohom/order_complex.hpp"

#include "arrcohom/errors.hpp"

#include <algorithm>

namespace arrcohom {

namespace {

void check_member(const IntersectionLattice& L, std::size_t u)
{
    if (u >= L.size()) throw DomainError("stratum index " + std::to_string(u) + " is not in the lattice");
}

/// All maximal chains of the closed interval [⊥,u], as ascending index lists.
std::vector<std::vector<std::size_t>> maximal_chains(const IntersectionLattice& L, std::size_t u)
{
    std::vector<std::size_t> inner = L.open_interval(u);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> chain{IntersectionLattice::bottom};
    auto extend = [&](auto&& self) -> void {
        const std::size_t last = chain.back();
        bool extended = false;
        for (std::size_t w : inner) {
            if (!L.less(last, w)) continue;
            bool cover = true;
            for (std::size_t x : inner)
                if (L.less(last, x) && L.less(x, w)) {
                    cover = false;
                    break;
                }
            if (!cover) continue;
            extended = true;
            chain.push_back(w);
            self(self);
            chain.pop_back();
        }
        if (!extended) {
            auto full = chain;
            if (u != IntersectionLattice::bottom) full.push_back(u);
            out.push_back(std::move(full));
        }
    };
    extend(extend);
    return out;
}

FaceSet to_face(const std::vector<std::size_t>& chain)
{
    std::vector<Vertex> v;
    for (auto s : chain) v.push_back(stratum_vertex(s));
    return FaceSet(std::move(v));
}

}  // namespace

IntervalComplexes interval_order_complex(const IntersectionLattice& L, std::size_t u)
{
    check_member(L, u);
    const int n = static_cast<int>(L.size());
    const Vertex lo = stratum_vertex(IntersectionLattice::bottom);
    const Vertex hi = stratum_vertex(u);
    std::vector<FaceSet> closed, boundary, open;
    for (const auto& chain : maximal_chains(L, u)) {
        FaceSet f = to_face(chain);
        boundary.push_back(f.without(lo));
        boundary.push_back(f.without(hi));
        open.push_back(f.without(lo).without(hi));
        closed.push_back(std::move(f));
    }
    return {SimplicialComplex::from_facets(n, std::move(closed)), SimplicialComplex::from_facets(n, std::move(boundary)),
            SimplicialComplex::from_facets(n, std::move(open))};
}

ChainComplex open_interval_chains(const IntersectionLattice& L, std::size_t u)
{
    check_member(L, u);
    const std::vector<std::size_t> inner = L.open_interval(u);
    const std::size_t n = inner.size();

    // levels[k] holds the chains with k elements (degree k-1), ascending.
    std::vector<std::vector<std::vector<std::size_t>>> levels{{{}}};
    std::vector<std::vector<std::size_t>> above(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (L.less(inner[a], inner[b])) above[a].push_back(b);

    std::vector<std::vector<std::size_t>> current;
    for (std::size_t a = 0; a < n; ++a) current.push_back({a});
    while (!current.empty()) {
        levels.push_back(current);
        std::vector<std::vector<std::size_t>> next;
        for (const auto& c : current)
            for (std::size_t b : above[c.back()]) {
                auto d = c;
                d.push_back(b);
                next.push_back(std::move(d));
            }
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }

    std::vector<SparseMatrix> boundaries;
    boundaries.emplace_back(0, 1);
    for (std::size_t k = 1; k < levels.size(); ++k) {
        const auto& lower = levels[k - 1];
        const auto& upper = levels[k];
        SparseMatrix d(lower.size(), upper.size());
        for (std::size_t j = 0; j < upper.size(); ++j) {
            std::vector<std::size_t> face(upper[j].size() - 1);
            for (std::size_t pos = 0; pos < upper[j].size(); ++pos) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < upper[j].size(); ++i)
                    if (i != pos) face[w++] = upper[j][i];
                auto it = std::lower_bound(lower.begin(), lower.end(), face);
                d.add(static_cast<std::size_t>(it - lower.begin()), j, pos % 2 == 0 ? 1 : -1);
            }
        }
        d.finalize();
        boundaries.push_back(std::move(d));
    }
    ChainComplex C(-1, std::move(boundaries));
    for (std::size_t k = 0; k < levels.size(); ++k) {
        std::vector<FaceSet> labels;
        for (const auto& c : levels[k]) {
            std::vector<std::size_t> strata;
            for (auto a : c) strata.push_back(inner[a]);
            labels.push_back(to_face(strata));
        }
        C.set_basis(static_cast<int>(k) - 1, std::move(labels));
    }
    return C;
}

ChainComplex interval_pair_chains(const IntersectionLattice& L, std::size_t u)
{
    auto I = interval_order_complex(L, u);
    return relative_chains(I.closed, I.boundary_union);
}

}  // namespace arrcohom
