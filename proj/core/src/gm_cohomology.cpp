#include "arrcohom/gm_cohomology.hpp"

#include "arrcohom/complex_ops.hpp"
#include "arrcohom/errors.hpp"
#include "arrcohom/homology.hpp"
#include "arrcohom/order_complex.hpp"
#include "detail/parallel.hpp"

#include <climits>

namespace arrcohom {

namespace {

int factor(Ambient a) { return a == Ambient::Complex ? 2 : 1; }

int top_degree(const GmOptions& o, int N) { return o.max_q.value_or(N); }

AbelianGroup unit() { return AbelianGroup{1, {}}; }

void check_diagonal_formula_input(const SimplicialComplex& K, const char* what)
{
    if (K.is_void()) throw DomainError(std::string(what) + ": the void complex is not allowed");
    if (K.has_ghost_vertices())
        throw DomainError(std::string(what) + ": diagonal arrangements require a complex without ghost vertices");
    if (!common_vertex_predicate(K))
        throw DomainError(std::string(what) + " requires every two missing faces to share a vertex");
}

std::vector<FaceSet> all_subsets(int m)
{
    if (m > 25) throw DomainError("subset enumeration is limited to m <= 25");
    std::vector<FaceSet> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) out.push_back(FaceSet::from_mask(s));
    return out;
}

}  // namespace

GmResult gm_terms(const IntersectionLattice& L, const GmOptions& options)
{
    const int N = L.ambient_dimension();
    const int max_q = top_degree(options, N);

    auto term = [&](std::size_t u) {
        GradedAbelianGroup out;
        const auto open = homology(open_interval_chains(L, u));
        if (options.pair_oracle) {
            const auto pair = homology(interval_pair_chains(L, u));
            if (!(pair == open.shifted(2)))
                throw OracleMismatch("pair homology of stratum " + L[u].to_string(L.kind()) +
                                     " disagrees with the open-interval reduction: " + pair.render("H_") + " vs " +
                                     open.shifted(2).render("H_"));
        }
        for (const auto& [j, g] : open.groups()) {
            const int q = N - L.d(u) - j - 2;
            if (q >= 0 && q <= max_q) out.add(q, g);
        }
        return out;
    };
    auto parts = detail::parallel_map<GradedAbelianGroup>(L.size() - 1, options.jobs,
                                                          [&](std::size_t i) { return term(i + 1); });

    GmResult result;
    if (max_q >= 0) {
        result.cohomology.add(0, unit());
        GradedAbelianGroup base;
        base.add(0, unit());
        result.terms.push_back({IntersectionLattice::bottom, std::move(base)});
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].is_zero()) continue;
        result.cohomology += parts[i];
        result.terms.push_back({i + 1, std::move(parts[i])});
    }
    if (L.kind() == ArrangementKind::Diagonal && L.ambient() == Ambient::Complex)
        for (int q : result.cohomology.degrees())
            if (q > N - 2)
                throw IntegrityError("nonzero cohomology in degree " + std::to_string(q) +
                                     " exceeds the bound for a complex diagonal arrangement");
    return result;
}

GradedAbelianGroup gm_cohomology(const IntersectionLattice& L, const GmOptions& options)
{
    return gm_terms(L, options).cohomology;
}

GradedAbelianGroup diagonal_cohomology(const SimplicialComplex& K, Ambient ambient, const GmOptions& options)
{
    return gm_cohomology(diagonal_lattice(K, ambient), options);
}

GradedAbelianGroup coordinate_cohomology(const SimplicialComplex& K, Ambient ambient, const GmOptions& options)
{
    return gm_cohomology(coordinate_lattice(K, ambient), options);
}

GradedAbelianGroup diagonal_cohomology_via_links(const SimplicialComplex& K, Ambient ambient, const GmOptions& options)
{
    check_diagonal_formula_input(K, "diagonal_cohomology_via_links");
    const int m = K.vertex_count();
    const int c = factor(ambient);
    const int max_q = top_degree(options, c * m);
    const auto dual = alexander_dual(K);
    const auto faces = dual.is_void() ? std::vector<FaceSet>{} : dual.faces();

    auto parts = detail::parallel_map<GradedAbelianGroup>(faces.size(), options.jobs, [&](std::size_t i) {
        GradedAbelianGroup out;
        const int size_I = m - static_cast<int>(faces[i].size());
        const auto H = reduced_homology(link(dual, faces[i]).complex);
        for (const auto& [j, g] : H.groups()) {
            const int q = c * (size_I - 1) - 2 - j;
            if (q >= 0 && q <= max_q) out.add(q, g);
        }
        return out;
    });
    GradedAbelianGroup H;
    if (max_q >= 0) H.add(0, unit());
    for (const auto& p : parts) H += p;
    return H;
}

GradedAbelianGroup diagonal_cohomology_via_subcomplexes(const SimplicialComplex& K, Ambient ambient,
                                                        const GmOptions& options)
{
    check_diagonal_formula_input(K, "diagonal_cohomology_via_subcomplexes");
    const int m = K.vertex_count();
    const int c = factor(ambient);
    const int max_q = top_degree(options, c * m);
    std::vector<FaceSet> subsets;
    for (auto& I : all_subsets(m))
        if (!K.contains(I)) subsets.push_back(std::move(I));

    auto parts = detail::parallel_map<GradedAbelianGroup>(subsets.size(), options.jobs, [&](std::size_t i) {
        GradedAbelianGroup out;
        const int size_I = static_cast<int>(subsets[i].size());
        const auto H = reduced_cohomology(full_subcomplex(K, subsets[i]).complex);
        for (const auto& [p, g] : H.groups()) {
            const int q = p + (c - 1) * (size_I - 1);
            if (q >= 0 && q <= max_q) out.add(q, g);
        }
        return out;
    });
    GradedAbelianGroup H;
    if (max_q >= 0) H.add(0, unit());
    for (const auto& p : parts) H += p;
    return H;
}

GradedAbelianGroup coordinate_cohomology_hochster(const SimplicialComplex& K, Ambient ambient,
                                                  const GmOptions& options)
{
    if (K.is_void()) throw DomainError("the void complex does not determine an arrangement");
    const int m = K.vertex_count();
    const int c = factor(ambient);
    const int max_q = top_degree(options, c * m);
    const auto subsets = all_subsets(m);

    auto parts = detail::parallel_map<GradedAbelianGroup>(subsets.size(), options.jobs, [&](std::size_t i) {
        GradedAbelianGroup out;
        const int size_I = static_cast<int>(subsets[i].size());
        const auto H = reduced_cohomology(full_subcomplex(K, subsets[i]).complex);
        for (const auto& [p, g] : H.groups()) {
            const int q = p + (c - 1) * size_I + 1;
            if (q >= 0 && q <= max_q) out.add(q, g);
        }
        return out;
    });
    GradedAbelianGroup H;
    for (const auto& p : parts) H += p;
    return H;
}

GradedAbelianGroup reduced_part(const GradedAbelianGroup& cohomology)
{
    GradedAbelianGroup out = cohomology.truncated(1, INT_MAX);
    const auto& h0 = cohomology[0];
    if (h0.rank == 0) throw DomainError("reduced_part: H^0 has no free summand");
    out.set(0, AbelianGroup{h0.rank - 1, h0.torsion});
    return out;
}

}  // namespace arrcohom
