#include "arrcohom/complex_ops.hpp"

#include "arrcohom/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace arrcohom {

namespace {

/// Relabels faces living on `kept` (sorted vertex list) to 1..|kept|.
FaceSet compress(const FaceSet& face, const std::vector<Vertex>& kept)
{
    std::vector<Vertex> v;
    v.reserve(face.size());
    for (Vertex x : face) {
        auto it = std::lower_bound(kept.begin(), kept.end(), x);
        v.push_back(static_cast<Vertex>(it - kept.begin()) + 1);
    }
    return FaceSet(std::move(v));
}

}  // namespace

std::vector<FaceSet> missing_faces(const SimplicialComplex& K)
{
    if (K.is_void()) return {FaceSet{}};
    // Every missing face is F ∪ {v} for some face F, so candidates come from faces.
    std::set<FaceSet> found;
    const int m = K.vertex_count();
    for (const auto& level : K.faces_by_dimension()) {
        for (const auto& F : level) {
            for (Vertex v = F.max() + 1; v <= m; ++v) {
                FaceSet cand = F.with(v);
                if (K.contains(cand)) continue;
                bool minimal = true;
                for (Vertex u : cand) {
                    if (!K.contains(cand.without(u))) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) found.insert(std::move(cand));
            }
        }
    }
    return {found.begin(), found.end()};
}

bool common_vertex_predicate(const SimplicialComplex& K)
{
    const auto mf = missing_faces(K);
    for (std::size_t i = 0; i < mf.size(); ++i)
        for (std::size_t j = i + 1; j < mf.size(); ++j)
            if (!mf[i].intersects(mf[j])) return false;
    return true;
}

LabeledComplex link(const SimplicialComplex& K, const FaceSet& I)
{
    if (!K.contains(I)) throw DomainError("link: " + I.to_string() + " is not a face");
    std::vector<Vertex> kept = FaceSet::range(K.vertex_count()).minus(I).vertices();
    std::vector<FaceSet> facets;
    for (const auto& F : K.facets())
        if (I.is_subset_of(F)) facets.push_back(compress(F.minus(I), kept));
    const int n = static_cast<int>(kept.size());
    return {SimplicialComplex::from_facets(n, std::move(facets)), std::move(kept)};
}

LabeledComplex full_subcomplex(const SimplicialComplex& K, const FaceSet& J)
{
    if (J.max() > K.vertex_count()) throw DomainError("full_subcomplex: J is not a subset of [m]");
    std::vector<Vertex> kept = J.vertices();
    std::vector<FaceSet> facets;
    for (const auto& F : K.facets()) facets.push_back(compress(F.intersected(J), kept));
    const int n = static_cast<int>(kept.size());
    if (K.is_void()) return {SimplicialComplex::void_complex(n), std::move(kept)};
    return {SimplicialComplex::from_facets(n, std::move(facets)), std::move(kept)};
}

SimplicialComplex alexander_dual(const SimplicialComplex& K)
{
    const FaceSet all = FaceSet::range(K.vertex_count());
    std::vector<FaceSet> facets;
    for (const auto& I : missing_faces(K)) facets.push_back(all.minus(I));
    return SimplicialComplex::from_facets(K.vertex_count(), std::move(facets));
}

SimplicialComplex join_complex(const SimplicialComplex& K1, const SimplicialComplex& K2)
{
    const int m1 = K1.vertex_count();
    std::vector<FaceSet> facets;
    for (const auto& A : K1.facets()) {
        for (const auto& B : K2.facets()) {
            std::vector<Vertex> v = A.vertices();
            for (Vertex b : B) v.push_back(b + m1);
            facets.emplace_back(std::move(v));
        }
    }
    return SimplicialComplex::from_facets(m1 + K2.vertex_count(), std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& K, int d)
{
    if (d < -1) throw DomainError("skeleton: dimension must be >= -1");
    std::vector<FaceSet> facets;
    for (const auto& F : K.facets()) {
        if (static_cast<int>(F.size()) <= d + 1) {
            facets.push_back(F);
            continue;
        }
        // All (d+1)-subsets of F.
        const auto n = F.size();
        const auto k = static_cast<std::size_t>(d + 1);
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (true) {
            std::vector<Vertex> v;
            for (auto i : idx) v.push_back(F[i]);
            facets.emplace_back(std::move(v));
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (auto j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return SimplicialComplex::from_facets(K.vertex_count(), std::move(facets));
}

SimplicialComplex suspension(const SimplicialComplex& K)
{
    return join_complex(K, SimplicialComplex::from_facets(2, {FaceSet{1}, FaceSet{2}}));
}

SimplicialComplex cone_extension(const SimplicialComplex& K)
{
    const int m = K.vertex_count();
    std::vector<FaceSet> facets{FaceSet::range(m)};
    for (const auto& F : K.facets()) facets.push_back(F.with(m + 1));
    return SimplicialComplex::from_facets(m + 1, std::move(facets));
}

SimplicialComplex permuted(const SimplicialComplex& K, const std::vector<Vertex>& perm)
{
    if (static_cast<int>(perm.size()) != K.vertex_count()) throw DomainError("permuted: wrong permutation length");
    std::vector<FaceSet> facets;
    for (const auto& F : K.facets()) {
        std::vector<Vertex> v;
        for (Vertex x : F) v.push_back(perm[static_cast<std::size_t>(x - 1)]);
        facets.emplace_back(std::move(v));
    }
    return SimplicialComplex::from_facets(K.vertex_count(), std::move(facets));
}

FaceVertexComplex barycentric_subdivision(const SimplicialComplex& K)
{
    std::vector<FaceSet> nonempty;
    for (auto& f : K.faces())
        if (!f.empty()) nonempty.push_back(std::move(f));
    std::map<FaceSet, Vertex> index;
    for (std::size_t i = 0; i < nonempty.size(); ++i) index.emplace(nonempty[i], static_cast<Vertex>(i) + 1);

    std::vector<FaceSet> facets;
    for (const auto& F : K.facets()) {
        if (F.empty()) continue;
        std::vector<Vertex> order = F.vertices();
        do {
            std::vector<Vertex> chain;
            FaceSet prefix;
            for (Vertex v : order) {
                prefix = prefix.with(v);
                chain.push_back(index.at(prefix));
            }
            facets.emplace_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    const int n = static_cast<int>(nonempty.size());
    if (K.is_void()) return {SimplicialComplex::void_complex(0), {}};
    if (facets.empty()) facets.push_back(FaceSet{});
    return {SimplicialComplex::from_facets(n, std::move(facets)), std::move(nonempty)};
}

FaceVertexComplex complement_model(const SimplicialComplex& X, const SimplicialComplex& Y)
{
    if (!Y.is_subcomplex_of(X)) throw DomainError("complement_model: Y is not a subcomplex of X");
    auto sd = barycentric_subdivision(X);
    std::vector<Vertex> outside;
    for (std::size_t i = 0; i < sd.vertex_faces.size(); ++i)
        if (!Y.contains(sd.vertex_faces[i])) outside.push_back(static_cast<Vertex>(i) + 1);
    auto Z = full_subcomplex(sd.complex, FaceSet(outside));
    std::vector<FaceSet> faces;
    for (Vertex v : Z.labels) faces.push_back(sd.vertex_faces[static_cast<std::size_t>(v - 1)]);
    return {std::move(Z.complex), std::move(faces)};
}

}  // namespace arrcohom
