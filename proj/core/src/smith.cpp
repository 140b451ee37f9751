#include "arrcohom/smith.hpp"

#include "arrcohom/errors.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace arrcohom {

namespace {

struct Overflow {};

// Checked machine-integer arithmetic; the mpz overloads never throw.
inline std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, mul(q, b), &r)) throw Overflow{};
    return r;
}
inline std::int64_t neg(std::int64_t a)
{
    if (a == INT64_MIN) throw Overflow{};
    return -a;
}
inline std::int64_t quot(std::int64_t a, std::int64_t b)
{
    if (a == INT64_MIN && b == -1) throw Overflow{};
    return a / b;
}
inline bool divides(std::int64_t d, std::int64_t a) { return d == 1 || d == -1 || a % d == 0; }
inline std::uint64_t magnitude(std::int64_t a)
{
    return a < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
}
inline bool abs_less(std::int64_t a, std::int64_t b) { return magnitude(a) < magnitude(b); }
inline bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
inline Integer to_integer(std::int64_t a) { return Integer(static_cast<long>(a)); }

inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer sub_mul(const Integer& a, const Integer& q, const Integer& b) { return a - q * b; }
inline Integer neg(const Integer& a) { return -a; }
inline Integer quot(const Integer& a, const Integer& b) { return a / b; }
inline bool divides(const Integer& d, const Integer& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }
inline bool abs_less(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
inline bool is_unit(const Integer& a) { return a == 1 || a == -1; }
inline Integer to_integer(const Integer& a) { return a; }

template <class T>
class Dense {
public:
    Dense() = default;
    Dense(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    static Dense identity(std::size_t n)
    {
        Dense d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = T(1);
        return d;
    }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    /// row dst -= q * row src
    void row_sub(std::size_t dst, std::size_t src, const T& q)
    {
        for (std::size_t k = 0; k < cols_; ++k)
            if ((*this)(src, k) != 0) (*this)(dst, k) = sub_mul((*this)(dst, k), q, (*this)(src, k));
    }
    /// col dst -= q * col src
    void col_sub(std::size_t dst, std::size_t src, const T& q)
    {
        for (std::size_t k = 0; k < rows_; ++k)
            if ((*this)(k, src) != 0) (*this)(k, dst) = sub_mul((*this)(k, dst), q, (*this)(k, src));
    }
    void negate_row(std::size_t i)
    {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = neg((*this)(i, k));
    }
    void negate_col(std::size_t j)
    {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = neg((*this)(k, j));
    }

    IntegerMatrix to_integer_matrix() const
    {
        IntegerMatrix M(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) M(i, j) = to_integer((*this)(i, j));
        return M;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

/**
 * Smith reduction with minimal-absolute-value pivoting. Row operations on A
 * are mirrored on U (left) and, inverted, on U⁻¹ (right); column operations
 * on V (right) and V⁻¹ (left).
 */
template <class T>
class SmithReducer {
public:
    SmithReducer(Dense<T> a, bool track) : A(std::move(a)), track_(track)
    {
        if (track_) {
            U = Dense<T>::identity(A.rows());
            Ui = U;
            V = Dense<T>::identity(A.cols());
            Vi = V;
        }
    }

    void run()
    {
        const std::size_t limit = std::min(A.rows(), A.cols());
        rank = 0;
        for (std::size_t t = 0; t < limit; ++t) {
            if (!reduce_at(t)) return;
            if (A(t, t) < 0) negate_row(t);
            rank = t + 1;
        }
    }

    Dense<T> A, U, Ui, V, Vi;
    std::size_t rank = 0;

private:
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const
    {
        bool found = false;
        for (std::size_t i = t; i < A.rows(); ++i)
            for (std::size_t j = t; j < A.cols(); ++j) {
                const T& x = A(i, j);
                if (x == 0) continue;
                if (!found || abs_less(x, A(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                    if (is_unit(x)) return true;
                }
            }
        return found;
    }

    bool reduce_at(std::size_t t)
    {
        while (true) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(t, pi, pj)) return false;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < A.rows(); ++i) {
                if (A(i, t) == 0) continue;
                row_sub(i, t, quot(A(i, t), A(t, t)));
                if (A(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < A.cols(); ++j) {
                if (A(t, j) == 0) continue;
                col_sub(j, t, quot(A(t, j), A(t, t)));
                if (A(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            bool fixed = false;
            for (std::size_t i = t + 1; i < A.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < A.cols(); ++j)
                    if (A(i, j) != 0 && !divides(A(t, t), A(i, j))) {
                        row_sub(t, i, T(-1));  // row t += row i
                        fixed = true;
                        break;
                    }
            if (!fixed) return true;
        }
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        A.swap_rows(i, j);
        if (track_) {
            U.swap_rows(i, j);
            Ui.swap_cols(i, j);
        }
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        A.swap_cols(i, j);
        if (track_) {
            V.swap_cols(i, j);
            Vi.swap_rows(i, j);
        }
    }
    void row_sub(std::size_t dst, std::size_t src, const T& q)
    {
        A.row_sub(dst, src, q);
        if (track_) {
            U.row_sub(dst, src, q);
            Ui.col_sub(src, dst, neg(q));  // E⁻¹ adds q·row src back
        }
    }
    void col_sub(std::size_t dst, std::size_t src, const T& q)
    {
        A.col_sub(dst, src, q);
        if (track_) {
            V.col_sub(dst, src, q);
            Vi.row_sub(src, dst, neg(q));
        }
    }
    void negate_row(std::size_t i)
    {
        A.negate_row(i);
        if (track_) {
            U.negate_row(i);
            Ui.negate_col(i);
        }
    }

    bool track_;
};

bool fits_int64(const IntegerMatrix& A)
{
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!A(i, j).fits_slong_p()) return false;
    return true;
}

template <class T>
Dense<T> to_dense(const IntegerMatrix& A)
{
    Dense<T> d(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if constexpr (std::is_same_v<T, std::int64_t>) d(i, j) = A(i, j).get_si();
            else d(i, j) = A(i, j);
        }
    return d;
}

template <class T>
SmithDecomposition decompose(const IntegerMatrix& A)
{
    SmithReducer<T> red(to_dense<T>(A), true);
    red.run();
    SmithDecomposition out;
    out.D = red.A.to_integer_matrix();
    out.U = red.U.to_integer_matrix();
    out.V = red.V.to_integer_matrix();
    out.U_inverse = red.Ui.to_integer_matrix();
    out.V_inverse = red.Vi.to_integer_matrix();
    out.rank = red.rank;
    return out;
}

template <class T>
std::vector<Integer> dense_factors(Dense<T> A)
{
    SmithReducer<T> red(std::move(A), false);
    red.run();
    std::vector<Integer> out;
    for (std::size_t i = 0; i < red.rank; ++i) out.push_back(to_integer(red.A(i, i)));
    return out;
}

template <class T>
std::vector<Integer> sparse_factors(const SparseMatrix& M)
{
    using Entry = std::pair<std::uint32_t, T>;
    const std::size_t nr = M.rows();
    const std::size_t nc = M.cols();
    std::vector<std::vector<Entry>> rows(nr);
    std::vector<std::vector<std::uint32_t>> occupancy(nc);
    for (std::size_t j = 0; j < nc; ++j)
        for (const auto& [i, v] : M.column(j)) {
            if (v == 0) continue;
            rows[i].emplace_back(static_cast<std::uint32_t>(j), T(static_cast<long>(v)));
            occupancy[j].push_back(i);
        }
    std::vector<char> row_alive(nr, 1);
    std::vector<char> col_alive(nc, 1);
    std::size_t units = 0;
    std::vector<Entry> scratch;

    auto find_entry = [](const std::vector<Entry>& row, std::uint32_t c) -> const Entry* {
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t x) { return e.first < x; });
        return (it != row.end() && it->first == c) ? &*it : nullptr;
    };

    auto eliminate = [&](std::uint32_t r, std::uint32_t c, const T& pivot) {
        const auto& prow = rows[r];
        for (std::uint32_t s : occupancy[c]) {
            if (s == r || !row_alive[s]) continue;
            const Entry* e = find_entry(rows[s], c);
            if (!e) continue;
            const T factor = pivot == 1 ? e->second : neg(e->second);  // pivot⁻¹ = pivot
            scratch.clear();
            auto& srow = rows[s];
            std::size_t a = 0, b = 0;
            while (a < srow.size() || b < prow.size()) {
                if (b == prow.size() || (a < srow.size() && srow[a].first < prow[b].first)) {
                    scratch.push_back(srow[a++]);
                } else if (a == srow.size() || prow[b].first < srow[a].first) {
                    scratch.emplace_back(prow[b].first, sub_mul(T(0), factor, prow[b].second));
                    occupancy[prow[b].first].push_back(s);
                    ++b;
                } else {
                    T v = sub_mul(srow[a].second, factor, prow[b].second);
                    if (v != 0) scratch.emplace_back(srow[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            srow.swap(scratch);
        }
        row_alive[r] = 0;
        col_alive[c] = 0;
        occupancy[c].clear();
        ++units;
    };

    std::vector<std::uint32_t> order(nr);
    bool progress = true;
    while (progress) {
        progress = false;
        std::iota(order.begin(), order.end(), 0u);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t x, std::uint32_t y) { return rows[x].size() < rows[y].size(); });
        for (std::uint32_t r : order) {
            if (!row_alive[r] || rows[r].empty()) continue;
            std::size_t best_score = SIZE_MAX;
            std::uint32_t best_col = 0;
            T best_val(0);
            for (const auto& [c, v] : rows[r]) {
                if (!is_unit(v)) continue;
                if (occupancy[c].size() < best_score) {
                    best_score = occupancy[c].size();
                    best_col = c;
                    best_val = v;
                }
            }
            if (best_score == SIZE_MAX) continue;
            eliminate(r, best_col, best_val);
            progress = true;
        }
    }

    std::vector<std::uint32_t> rest_rows;
    std::vector<std::uint32_t> col_index(nc, UINT32_MAX);
    std::uint32_t ncols = 0;
    for (std::uint32_t r = 0; r < nr; ++r) {
        if (!row_alive[r] || rows[r].empty()) continue;
        rest_rows.push_back(r);
        for (const auto& [c, v] : rows[r])
            if (col_index[c] == UINT32_MAX) col_index[c] = ncols++;
    }
    std::vector<Integer> out(units, Integer(1));
    if (rest_rows.empty()) return out;
    Dense<T> rest(rest_rows.size(), ncols);
    for (std::size_t i = 0; i < rest_rows.size(); ++i)
        for (const auto& [c, v] : rows[rest_rows[i]]) rest(i, col_index[c]) = v;
    for (auto& f : dense_factors(std::move(rest))) out.push_back(std::move(f));
    return out;
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& A)
{
    if (fits_int64(A)) {
        try {
            return decompose<std::int64_t>(A);
        } catch (const Overflow&) {
        }
    }
    return decompose<Integer>(A);
}

std::vector<Integer> invariant_factors(const IntegerMatrix& A)
{
    if (fits_int64(A)) {
        try {
            return dense_factors(to_dense<std::int64_t>(A));
        } catch (const Overflow&) {
        }
    }
    return dense_factors(to_dense<Integer>(A));
}

std::vector<Integer> invariant_factors(const SparseMatrix& A)
{
    try {
        return sparse_factors<std::int64_t>(A);
    } catch (const Overflow&) {
        return sparse_factors<Integer>(A);
    }
}

}  // namespace arrcohom
