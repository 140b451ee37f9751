#include "arrcohom/chains.hpp"

#include "arrcohom/errors.hpp"

namespace arrcohom {

template <class V>
void FormalChain<V>::add(const Simplex& simplex, const Integer& coefficient)
{
    if (static_cast<int>(simplex.size()) != degree_ + 1)
        throw DomainError("a degree " + std::to_string(degree_) + " chain needs simplices with " +
                          std::to_string(degree_ + 1) + " vertices");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(simplex, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

template <class V>
FormalChain<V> FormalChain<V>::boundary() const
{
    FormalChain out(degree_ - 1);
    if (degree_ <= 0) return out;
    for (const auto& [simplex, c] : terms_)
        for (std::size_t pos = 0; pos < simplex.size(); ++pos) {
            Simplex face;
            face.reserve(simplex.size() - 1);
            for (std::size_t i = 0; i < simplex.size(); ++i)
                if (i != pos) face.push_back(simplex[i]);
            out.add(face, pos % 2 == 0 ? c : Integer(-c));
        }
    return out;
}

template <class V>
FormalChain<V>& FormalChain<V>::operator+=(const FormalChain& other)
{
    if (terms_.empty()) degree_ = other.degree_;
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
}

template <class V>
FormalChain<V>& FormalChain<V>::operator-=(const FormalChain& other)
{
    if (terms_.empty()) degree_ = other.degree_;
    for (const auto& [s, c] : other.terms_) add(s, -c);
    return *this;
}

template <class V>
FormalChain<V> FormalChain<V>::operator*(const Integer& scalar) const
{
    FormalChain out(degree_);
    for (const auto& [s, c] : terms_) out.add(s, c * scalar);
    return out;
}

template class FormalChain<std::size_t>;
template class FormalChain<ProductVertex>;

ProductChain cross_product(const LabeledChain& s, const LabeledChain& t)
{
    const int k = s.degree();
    const int l = t.degree();
    ProductChain out(k + l);
    if (k < 0 || l < 0) throw DomainError("cross_product: factors must have non-negative degree");

    // Every path is a word of k horizontal (true) and l vertical (false) steps.
    std::vector<std::pair<std::vector<bool>, int>> paths;
    std::vector<bool> word;
    auto build = [&](auto&& self, int h, int v, int inversions) -> void {
        if (h == k && v == l) {
            paths.emplace_back(word, inversions % 2 == 0 ? 1 : -1);
            return;
        }
        if (h < k) {
            word.push_back(true);
            self(self, h + 1, v, inversions + v);
            word.pop_back();
        }
        if (v < l) {
            word.push_back(false);
            self(self, h, v + 1, inversions);
            word.pop_back();
        }
    };
    build(build, 0, 0, 0);

    for (const auto& [sigma, a] : s.terms())
        for (const auto& [tau, b] : t.terms()) {
            const Integer ab = a * b;
            for (const auto& [steps, sign] : paths) {
                ProductChain::Simplex simplex;
                std::size_t i = 0, j = 0;
                simplex.emplace_back(sigma[0], tau[0]);
                for (bool horizontal : steps) {
                    if (horizontal) ++i;
                    else ++j;
                    simplex.emplace_back(sigma[i], tau[j]);
                }
                out.add(simplex, sign > 0 ? ab : Integer(-ab));
            }
        }
    return out;
}

JoinImage apply_join(const IntersectionLattice& L, const ProductChain& c)
{
    JoinImage out{LabeledChain(c.degree()), 0};
    for (const auto& [simplex, coefficient] : c.terms()) {
        LabeledChain::Simplex image;
        bool degenerate = false;
        for (const auto& [z, w] : simplex) {
            const std::size_t x = L.join(z, w);
            if (!image.empty()) {
                if (image.back() == x) degenerate = true;
                else if (!L.less(image.back(), x)) throw IntegrityError("apply_join: image is not a chain");
            }
            image.push_back(x);
        }
        if (degenerate) {
            ++out.degenerate_dropped;
            continue;
        }
        out.chain.add(image, coefficient);
    }
    return out;
}

}  // namespace arrcohom
