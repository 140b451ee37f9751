#include "arrcohom/chain_complex.hpp"

#include "arrcohom/errors.hpp"

#include <unordered_map>

namespace arrcohom {

ChainComplex::ChainComplex(int lowest_degree, std::vector<SparseMatrix> boundaries)
    : lowest_(lowest_degree), boundaries_(std::move(boundaries)), labels_(boundaries_.size())
{
    if (!boundaries_.empty() && boundaries_.front().rows() != 0)
        throw IntegrityError("ChainComplex: lowest boundary must map to the zero group");
    for (std::size_t i = 1; i < boundaries_.size(); ++i)
        if (boundaries_[i].rows() != boundaries_[i - 1].cols())
            throw IntegrityError("ChainComplex: boundary dimensions do not compose");
}

std::size_t ChainComplex::rank(int k) const
{
    return has_degree(k) ? boundaries_[static_cast<std::size_t>(k - lowest_)].cols() : 0;
}

const SparseMatrix& ChainComplex::boundary(int k) const
{
    if (!has_degree(k)) throw DomainError("ChainComplex::boundary: degree out of range");
    return boundaries_[static_cast<std::size_t>(k - lowest_)];
}

void ChainComplex::verify() const
{
    for (std::size_t i = 1; i < boundaries_.size(); ++i)
        if (!boundaries_[i - 1].multiply(boundaries_[i]).is_zero())
            throw IntegrityError("boundary of a boundary is nonzero in degree " +
                                 std::to_string(lowest_ + static_cast<int>(i)));
}

void ChainComplex::set_basis(int k, std::vector<FaceSet> labels)
{
    if (labels.size() != rank(k)) throw DomainError("ChainComplex::set_basis: label count does not match rank");
    labels_[static_cast<std::size_t>(k - lowest_)] = std::move(labels);
}

const std::vector<FaceSet>& ChainComplex::basis(int k) const
{
    static const std::vector<FaceSet> none;
    return has_degree(k) ? labels_[static_cast<std::size_t>(k - lowest_)] : none;
}

namespace {

/// levels[i] = basis of degree lowest + i; boundary faces absent from the index are dropped.
ChainComplex assemble(int lowest, std::vector<std::vector<FaceSet>> levels)
{
    std::vector<std::unordered_map<FaceSet, std::size_t, FaceSetHash>> index(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t j = 0; j < levels[i].size(); ++j) index[i].emplace(levels[i][j], j);

    std::vector<SparseMatrix> boundaries;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        SparseMatrix d(i == 0 ? 0 : levels[i - 1].size(), levels[i].size());
        if (i > 0) {
            for (std::size_t j = 0; j < levels[i].size(); ++j) {
                const FaceSet& s = levels[i][j];
                for (std::size_t pos = 0; pos < s.size(); ++pos) {
                    auto it = index[i - 1].find(s.without(s[pos]));
                    if (it == index[i - 1].end()) continue;
                    d.add(it->second, j, pos % 2 == 0 ? 1 : -1);
                }
            }
            d.finalize();
        }
        boundaries.push_back(std::move(d));
    }
    ChainComplex C(lowest, std::move(boundaries));
    for (std::size_t i = 0; i < levels.size(); ++i) C.set_basis(lowest + static_cast<int>(i), std::move(levels[i]));
    return C;
}

}  // namespace

ChainComplex simplicial_chains(const SimplicialComplex& K, bool augmented)
{
    auto levels = K.faces_by_dimension();
    if (!augmented && !levels.empty()) levels.erase(levels.begin());
    if (levels.empty()) return ChainComplex(augmented ? -1 : 0, {});
    return assemble(augmented ? -1 : 0, std::move(levels));
}

ChainComplex relative_chains(const SimplicialComplex& X, const SimplicialComplex& A)
{
    if (!A.is_subcomplex_of(X)) throw DomainError("relative_chains: A is not a subcomplex of X");
    auto levels = X.faces_by_dimension();
    if (!levels.empty()) levels.erase(levels.begin());
    for (auto& level : levels) std::erase_if(level, [&](const FaceSet& f) { return A.contains(f); });
    if (levels.empty()) return ChainComplex(0, {});
    return assemble(0, std::move(levels));
}

}  // namespace arrcohom
