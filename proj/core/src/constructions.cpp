#include "arrcohom/constructions.hpp"

#include "arrcohom/complex_ops.hpp"
#include "arrcohom/errors.hpp"
#include "arrcohom/homology.hpp"
#include "detail/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arrcohom {

std::optional<LabeledComplex> realize_as_coordinate(const SimplicialComplex& L)
{
    if (L.has_ghost_vertices()) throw DomainError("realize_as_coordinate requires a complex without ghost vertices");
    const int m = L.vertex_count();
    const FaceSet all = FaceSet::range(m);
    for (Vertex v = m; v >= 1; --v)
        if (L.contains(all.without(v))) return link(L, FaceSet{v});
    return std::nullopt;
}

std::vector<BbcgSummand> bbcg_summands(const SimplicialComplex& K, unsigned jobs)
{
    const int m = K.vertex_count();
    if (m > 25) throw DomainError("bbcg_summands: subset enumeration is limited to m <= 25");
    std::vector<FaceSet> subsets;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) subsets.push_back(FaceSet::from_mask(s));
    std::sort(subsets.begin(), subsets.end());

    auto parts = detail::parallel_map<GradedAbelianGroup>(subsets.size(), jobs, [&](std::size_t i) {
        return reduced_homology(full_subcomplex(K, subsets[i]).complex).shifted(static_cast<int>(subsets[i].size()) + 1);
    });
    std::vector<BbcgSummand> out;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (!parts[i].is_zero()) out.push_back({subsets[i], std::move(parts[i])});
    return out;
}

GradedAbelianGroup bbcg_cohomology(const std::vector<BbcgSummand>& summands)
{
    GradedAbelianGroup H;
    H.add(0, AbelianGroup{1, {}});
    for (const auto& s : summands) H += cohomology_from_homology(s.reduced_homology);
    return H;
}

namespace {

std::optional<int> sphere_dimension(const GradedAbelianGroup& h)
{
    const auto& g = h.groups();
    if (g.size() == 1 && g.begin()->second == AbelianGroup{1, {}}) return g.begin()->first;
    return std::nullopt;
}

std::string subset_subscript(const FaceSet& I)
{
    std::string s = I.to_string();
    return s.substr(1, s.size() - 2);
}

}  // namespace

std::vector<WedgeTerm> wedge_summary(const std::vector<BbcgSummand>& summands)
{
    std::map<int, WedgeTerm> spheres;
    std::vector<WedgeTerm> others;
    for (const auto& s : summands) {
        if (auto n = sphere_dimension(s.reduced_homology)) {
            auto& t = spheres[*n];
            t.sphere = n;
            t.reduced_homology = s.reduced_homology;
            ++t.multiplicity;
            t.subsets.push_back(s.subset);
        } else {
            WedgeTerm t;
            t.multiplicity = 1;
            t.reduced_homology = s.reduced_homology;
            t.subsets = {s.subset};
            t.label = "Σ^" + std::to_string(s.subset.size() + 1) + "|K_{" + subset_subscript(s.subset) + "}|";
            others.push_back(std::move(t));
        }
    }
    std::vector<WedgeTerm> out;
    for (auto& [n, t] : spheres) {
        t.label = "S^" + std::to_string(n);
        if (t.multiplicity > 1) t.label = "(" + t.label + ")^{∨" + std::to_string(t.multiplicity) + "}";
        out.push_back(std::move(t));
    }
    for (auto& t : others) out.push_back(std::move(t));
    return out;
}

std::string render_wedge(const std::vector<WedgeTerm>& terms)
{
    if (terms.empty()) return "pt";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " ∨ ";
        out += t.label;
    }
    return out;
}

namespace {

long long binomial(long long n, long long r)
{
    if (n < 0 || r < 0 || r > n) return 0;
    long long b = 1;
    for (long long i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

void add_free(GradedAbelianGroup& g, int q, long long rank)
{
    if (rank > 0) g.add(q, AbelianGroup{static_cast<std::size_t>(rank), {}});
}

}  // namespace

KEqualReport kequal_closed_form(int m, int k, Ambient ambient, const GmOptions& options)
{
    if (k < 2 || k > m) throw DomainError("k-equal arrangements need 2 <= k <= m");
    KEqualReport r;
    r.m = m;
    r.k = k;
    r.ambient = ambient;
    r.in_range = k < m && m < 2 * k;
    r.notes.push_back("K = sk^{k-2} of the simplex on m vertices, so D(K) lies in the m-dimensional ambient space");

    const bool complex = ambient == Ambient::Complex;
    add_free(r.wedge, 0, 1);
    for (int l = k; l <= m; ++l)
        add_free(r.wedge, complex ? k + l - 3 : k - 2, binomial(m, l) * binomial(l - 1, k - 1));

    r.gm = diagonal_cohomology(skeleton(SimplicialComplex::full_simplex(m), k - 2), ambient, options);
    r.wedge_matches_gm = r.wedge == r.gm;

    if (!r.in_range) {
        r.notes.push_back("closed form suppressed: requires k < m < 2k");
        return r;
    }
    GradedAbelianGroup closed;
    add_free(closed, 0, 1);
    if (complex) {
        for (int q = 2 * k - 3; q <= m + k - 3; ++q) add_free(closed, q, binomial(m, q - k + 1) * binomial(q - k, k - 1));
    } else {
        long long s = 0;
        for (int l = k; l <= m; ++l) s += binomial(m, l) * binomial(l - 1, k - 1);
        add_free(closed, k - 2, s);
    }
    r.closed_form_matches_gm = closed == r.gm;
    if (complex && !(closed == r.wedge)) {
        r.closed_form_discrepancy = true;
        r.notes.push_back("printed coefficient t(q) = C(m,q-k+1)C(q-k,k-1) disagrees with the desuspended wedge "
                          "ranks C(m,q-k+3)C(q-k+2,k-1)");
    }
    r.closed_form = std::move(closed);
    return r;
}

namespace {

RelationCheck compare(std::string relation, const GradedAbelianGroup& lhs, const GradedAbelianGroup& rhs, int shift)
{
    RelationCheck c{std::move(relation), {}, true};
    std::set<int> degrees;
    for (int q : lhs.degrees()) degrees.insert(q);
    for (int q : rhs.degrees()) degrees.insert(q + shift);
    for (int q : degrees) {
        DegreeComparison row{q, lhs[q], rhs[q - shift], false};
        row.match = row.lhs == row.rhs;
        c.match = c.match && row.match;
        c.rows.push_back(std::move(row));
    }
    return c;
}

}  // namespace

std::vector<RelationCheck> suspension_relation_check(const SimplicialComplex& K, const GmOptions& options)
{
    if (!common_vertex_predicate(K))
        throw DomainError("suspension_relation_check requires every two missing faces to share a vertex");
    GmOptions o = options;
    o.max_q.reset();
    std::vector<RelationCheck> out;
    out.push_back(compare("H~^q(U(K)) = H~^{q-2}(D(K))",
                          reduced_part(coordinate_cohomology(K, Ambient::Complex, o)),
                          reduced_part(diagonal_cohomology(K, Ambient::Complex, o)), 2));
    out.push_back(compare("H~^q(U_R(K)) = H~^{q-1}(D_R(K))", reduced_part(coordinate_cohomology(K, Ambient::Real, o)),
                          reduced_part(diagonal_cohomology(K, Ambient::Real, o)), 1));
    return out;
}

std::vector<RelationCheck> cone_equivalence_check(const SimplicialComplex& K, const GmOptions& options)
{
    const auto L = cone_extension(K);
    GmOptions o = options;
    o.max_q.reset();
    std::vector<RelationCheck> out;
    out.push_back(compare("H^q(U(K)) = H^q(D(L))", coordinate_cohomology(K, Ambient::Complex, o),
                          diagonal_cohomology(L, Ambient::Complex, o), 0));
    out.push_back(compare("H^q(U_R(K)) = H^q(D_R(L))", coordinate_cohomology(K, Ambient::Real, o),
                          diagonal_cohomology(L, Ambient::Real, o), 0));
    return out;
}

NeighbourlinessReport neighbourliness(const SimplicialComplex& K)
{
    NeighbourlinessReport r;
    r.dimension = K.dimension();
    const auto mf = missing_faces(K);
    if (mf.empty()) r.neighbourly = K.vertex_count() - 1;
    else r.neighbourly = static_cast<int>(mf.front().size()) - 2;
    r.half_dimension = r.dimension <= 0 ? 0 : (r.dimension + 1) / 2;
    r.half_neighbourly = r.neighbourly >= r.half_dimension;
    return r;
}

}  // namespace arrcohom
