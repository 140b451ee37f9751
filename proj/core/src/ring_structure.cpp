#include "arrcohom/ring_structure.hpp"

#include "arrcohom/complex_ops.hpp"
#include "arrcohom/errors.hpp"
#include "arrcohom/order_complex.hpp"
#include "detail/parallel.hpp"

#include <algorithm>
#include <set>

namespace arrcohom {

bool codimension_condition(const IntersectionLattice& L, std::size_t u, std::size_t v)
{
    return L.d(u) + L.d(v) - L.d(L.join(u, v)) == L.ambient_dimension();
}

IntervalHomology::IntervalHomology(const IntersectionLattice& L, std::size_t u)
    : L_(&L), u_(u), chains_(interval_pair_chains(L, u)), groups_(homology(chains_))
{
    for (int k : groups_.degrees()) bases_[k] = std::make_shared<HomologyBasis>(chains_, k);
}

int IntervalHomology::cohomology_degree(int k) const { return L_->ambient_dimension() - L_->d(u_) - k; }

std::vector<LabeledChain> IntervalHomology::generators(int k) const
{
    std::vector<LabeledChain> out;
    auto it = bases_.find(k);
    if (it == bases_.end()) return out;
    const auto& basis = chains_.basis(k);
    for (const auto& g : it->second->generators()) {
        LabeledChain c(k);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0) continue;
            LabeledChain::Simplex s;
            for (Vertex x : basis[i]) s.push_back(vertex_stratum(x));
            c.add(s, g[i]);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Integer> IntervalHomology::coordinates(const LabeledChain& cycle) const
{
    const int k = cycle.degree();
    const auto& L = *L_;
    std::vector<Integer> vec(chains_.rank(k));
    const auto& basis = chains_.basis(k);
    for (const auto& [simplex, c] : cycle.terms()) {
        for (std::size_t i = 0; i < simplex.size(); ++i) {
            const bool ok = simplex[i] < L.size() && L.leq(simplex[i], u_) &&
                            (i == 0 || L.less(simplex[i - 1], simplex[i]));
            if (!ok) throw DomainError("chain contains a simplex that is not a chain of [⊥, " +
                                       L[u_].to_string(L.kind()) + "]");
        }
        if (simplex.front() != IntersectionLattice::bottom || simplex.back() != u_) continue;
        std::vector<Vertex> v;
        for (auto s : simplex) v.push_back(stratum_vertex(s));
        const FaceSet f(std::move(v));
        auto it = std::lower_bound(basis.begin(), basis.end(), f);
        if (it == basis.end() || *it != f) throw IntegrityError("relative basis is missing a chain of the interval");
        vec[static_cast<std::size_t>(it - basis.begin())] += c;
    }
    if (chains_.has_degree(k) && k > chains_.lowest_degree()) {
        const auto& d = chains_.boundary(k);
        std::vector<Integer> image(d.rows());
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (vec[j] != 0)
                for (const auto& [row, value] : d.column(j)) image[row] += vec[j] * Integer(static_cast<long>(value));
        for (const auto& x : image)
            if (x != 0) throw DomainError("chain is not a relative cycle");
    }
    auto it = bases_.find(k);
    if (it == bases_.end()) return {};
    return it->second->coordinates(vec);
}

bool ClassProduct::is_zero() const
{
    return std::all_of(coordinates.begin(), coordinates.end(), [](const Integer& x) { return x == 0; });
}

ClassProduct class_product(const IntersectionLattice& L, const IntervalHomology& hu, const IntervalHomology& hv,
                           const IntervalHomology& target, const LabeledChain& a, const LabeledChain& b)
{
    if (L.ambient() != Ambient::Complex) throw DomainError("products are only defined for complex arrangements");
    hu.coordinates(a);
    hv.coordinates(b);
    ClassProduct out;
    out.target = L.join(hu.stratum(), hv.stratum());
    if (target.stratum() != out.target) throw DomainError("class_product: target homology is for the wrong stratum");
    out.degree = a.degree() + b.degree();
    out.chain = LabeledChain(out.degree);
    out.group = target.groups()[out.degree];
    out.codimension_condition = codimension_condition(L, hu.stratum(), hv.stratum());
    if (!out.codimension_condition) {
        out.coordinates.assign(out.group.summands(), Integer(0));
        return out;
    }
    auto image = apply_join(L, cross_product(a, b));
    out.chain = std::move(image.chain);
    out.degenerate_dropped = image.degenerate_dropped;
    out.coordinates = target.coordinates(out.chain);
    return out;
}

ClassProduct class_product(const IntersectionLattice& L, std::size_t u, std::size_t v, const LabeledChain& a,
                           const LabeledChain& b)
{
    if (L.ambient() != Ambient::Complex) throw DomainError("products are only defined for complex arrangements");
    const IntervalHomology hu(L, u), hv(L, v), target(L, L.join(u, v));
    return class_product(L, hu, hv, target, a, b);
}

ProductTable product_table(IntersectionLattice lattice, unsigned jobs)
{
    if (lattice.ambient() != Ambient::Complex)
        throw DomainError("product tables are only defined for complex arrangements");
    ProductTable table{std::move(lattice), {}, 0, 0, {}, 0, true, {}};
    const auto& L = table.lattice;

    // Which strata carry positive-degree classes, from the cheap open-interval homology.
    auto groups = detail::parallel_map<GradedAbelianGroup>(L.size(), jobs, [&](std::size_t u) {
        return u == IntersectionLattice::bottom ? GradedAbelianGroup{} : homology(open_interval_chains(L, u)).shifted(2);
    });
    std::vector<std::size_t> carriers;
    for (std::size_t u = 1; u < L.size(); ++u)
        if (!groups[u].is_zero()) carriers.push_back(u);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < carriers.size(); ++a)
        for (std::size_t b = a + 1; b < carriers.size(); ++b) {
            ++table.stratum_pairs;
            if (codimension_condition(L, carriers[a], carriers[b])) pairs.emplace_back(carriers[a], carriers[b]);
        }
    table.codimension_pairs = pairs.size();

    std::set<std::size_t> needed(carriers.begin(), carriers.end());
    for (auto [u, v] : pairs) needed.insert(L.join(u, v));
    const std::vector<std::size_t> needed_list(needed.begin(), needed.end());
    auto built = detail::parallel_map<std::shared_ptr<IntervalHomology>>(
        needed_list.size(), jobs, [&](std::size_t i) { return std::make_shared<IntervalHomology>(L, needed_list[i]); });
    std::map<std::size_t, std::shared_ptr<IntervalHomology>> homologies;
    for (std::size_t i = 0; i < needed_list.size(); ++i) homologies[needed_list[i]] = built[i];

    for (auto u : carriers)
        for (int k : homologies[u]->groups().degrees())
            if (homologies[u]->cohomology_degree(k) > 0)
                table.classes.emplace_back(u, k, homologies[u]->groups()[k].summands());

    auto products = detail::parallel_map<std::vector<ProductEntry>>(pairs.size(), jobs, [&](std::size_t n) {
        const auto [u, v] = pairs[n];
        const auto& hu = *homologies.at(u);
        const auto& hv = *homologies.at(v);
        const auto& ht = *homologies.at(L.join(u, v));
        std::vector<ProductEntry> out;
        for (int k : hu.groups().degrees())
            for (int l : hv.groups().degrees()) {
                if (hu.cohomology_degree(k) <= 0 || hv.cohomology_degree(l) <= 0) continue;
                const auto ga = hu.generators(k);
                const auto gb = hv.generators(l);
                for (std::size_t i = 0; i < ga.size(); ++i)
                    for (std::size_t j = 0; j < gb.size(); ++j) {
                        const auto prod = class_product(L, hu, hv, ht, ga[i], gb[j]);
                        ProductEntry e;
                        e.u = u;
                        e.v = v;
                        e.k = k;
                        e.l = l;
                        e.i = i;
                        e.j = j;
                        e.p = hu.cohomology_degree(k);
                        e.q = hv.cohomology_degree(l);
                        e.target = prod.target;
                        e.target_group = prod.group;
                        e.coordinates = prod.coordinates;
                        e.nonzero = !prod.is_zero();
                        e.degenerate_dropped = prod.degenerate_dropped;
                        out.push_back(std::move(e));
                    }
            }
        return out;
    });
    std::set<std::pair<int, int>> blocks;
    for (auto& part : products)
        for (auto& e : part) {
            table.degenerate_dropped += e.degenerate_dropped;
            if (e.nonzero) {
                table.all_zero = false;
                blocks.emplace(std::min(e.p, e.q), std::max(e.p, e.q));
            }
            table.entries.push_back(std::move(e));
        }
    table.nonzero_blocks.assign(blocks.begin(), blocks.end());
    return table;
}

ProductTable product_table(const SimplicialComplex& K, ArrangementKind kind, Ambient ambient, unsigned jobs)
{
    if (ambient != Ambient::Complex) throw DomainError("product tables are only defined for complex arrangements");
    return product_table(arrangement_lattice(K, kind, ambient), jobs);
}

GolodReport golod_product_check(const SimplicialComplex& K, unsigned jobs)
{
    GolodReport r{common_vertex_predicate(K), false, false,
                  product_table(K, ArrangementKind::Coordinate, Ambient::Complex, jobs)};
    r.coordinate_products_all_zero = r.table.all_zero;
    r.golod_certified = r.common_vertex;
    return r;
}

}  // namespace arrcohom
