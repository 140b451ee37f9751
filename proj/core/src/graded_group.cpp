#include "arrcohom/graded_group.hpp"

#include "arrcohom/errors.hpp"

#include <algorithm>

namespace arrcohom {

AbelianGroup AbelianGroup::make(std::size_t rank, std::vector<Integer> orders)
{
    for (auto& t : orders) {
        if (t == 0) throw DomainError("AbelianGroup: a cyclic order of 0 is a free summand, not torsion");
        t = abs(t);
    }
    // Pairwise (gcd, lcm) replacement yields the divisibility chain.
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            Integer g, l;
            mpz_gcd(g.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
            orders[i] = g;
            orders[j] = l;
        }
    orders.erase(std::remove(orders.begin(), orders.end(), Integer(1)), orders.end());
    return {rank, std::move(orders)};
}

std::string AbelianGroup::to_string() const
{
    if (is_zero()) return "0";
    std::vector<std::string> parts;
    if (rank == 1) parts.push_back("Z");
    else if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        std::string s = "Z_" + torsion[i].get_str();
        if (j - i > 1) s += "^" + std::to_string(j - i);
        parts.push_back(std::move(s));
        i = j;
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " ⊕ ";
        out += parts[i];
    }
    return out;
}

AbelianGroup& AbelianGroup::operator+=(const AbelianGroup& other)
{
    std::vector<Integer> t = torsion;
    t.insert(t.end(), other.torsion.begin(), other.torsion.end());
    *this = make(rank + other.rank, std::move(t));
    return *this;
}

const AbelianGroup& GradedAbelianGroup::operator[](int degree) const
{
    static const AbelianGroup zero;
    auto it = groups_.find(degree);
    return it == groups_.end() ? zero : it->second;
}

void GradedAbelianGroup::add(int degree, const AbelianGroup& group)
{
    if (group.is_zero()) return;
    groups_[degree] += group;
}

void GradedAbelianGroup::set(int degree, AbelianGroup group)
{
    if (group.is_zero()) groups_.erase(degree);
    else groups_[degree] = std::move(group);
}

std::vector<int> GradedAbelianGroup::degrees() const
{
    std::vector<int> out;
    for (const auto& [q, g] : groups_) out.push_back(q);
    return out;
}

GradedAbelianGroup GradedAbelianGroup::shifted(int shift) const
{
    GradedAbelianGroup out;
    for (const auto& [q, g] : groups_) out.groups_[q + shift] = g;
    for (const auto& [q, g] : generators_) out.generators_[q + shift] = g;
    return out;
}

GradedAbelianGroup GradedAbelianGroup::truncated(int lo, int hi) const
{
    GradedAbelianGroup out;
    for (const auto& [q, g] : groups_)
        if (q >= lo && q <= hi) out.groups_[q] = g;
    return out;
}

GradedAbelianGroup& GradedAbelianGroup::operator+=(const GradedAbelianGroup& other)
{
    for (const auto& [q, g] : other.groups_) add(q, g);
    generators_.clear();
    return *this;
}

void GradedAbelianGroup::set_generators(int degree, std::vector<ChainVector> chains)
{
    generators_[degree] = std::move(chains);
}

const std::vector<ChainVector>& GradedAbelianGroup::generators(int degree) const
{
    static const std::vector<ChainVector> none;
    auto it = generators_.find(degree);
    return it == generators_.end() ? none : it->second;
}

std::string GradedAbelianGroup::render(const std::string& symbol) const
{
    if (groups_.empty()) return "0";
    std::string out;
    for (const auto& [q, g] : groups_) {
        if (!out.empty()) out += ", ";
        out += symbol + std::to_string(q) + " = " + g.to_string();
    }
    return out;
}

}  // namespace arrcohom
