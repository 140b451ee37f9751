#include "arrcohom/integer_matrix.hpp"

#include "arrcohom/errors.hpp"

#include <algorithm>
#include <map>

namespace arrcohom {

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    IntegerMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DomainError("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) A(i, j) = static_cast<long>(rows[i][j]);
    }
    return A;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const
{
    if (cols_ != other.rows_) throw DomainError("matrix product: dimension mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (other(k, j) != 0) out(i, j) += a * other(k, j);
        }
    return out;
}

std::vector<Integer> IntegerMatrix::operator*(const std::vector<Integer>& v) const
{
    if (cols_ != v.size()) throw DomainError("matrix-vector product: dimension mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntegerMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

std::string IntegerMatrix::to_json() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ',';
            s += (*this)(i, j).get_str();
        }
        s += ']';
    }
    return s + "]";
}

Integer determinant(const IntegerMatrix& A)
{
    if (A.rows() != A.cols()) throw DomainError("determinant: matrix is not square");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntegerMatrix M = A;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                M(i, j) = t;
            }
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value)
{
    if (row >= rows_ || col >= columns_.size()) throw DomainError("SparseMatrix::add: index out of range");
    columns_[col].emplace_back(static_cast<std::uint32_t>(row), value);
}

void SparseMatrix::finalize()
{
    for (auto& col : columns_) {
        std::sort(col.begin(), col.end());
        std::vector<Entry> merged;
        for (const auto& [r, v] : col) {
            if (!merged.empty() && merged.back().first == r) merged.back().second += v;
            else merged.emplace_back(r, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Entry& e) { return e.second == 0; }),
                     merged.end());
        col = std::move(merged);
    }
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const
{
    if (cols() != other.rows()) throw DomainError("SparseMatrix::multiply: dimension mismatch");
    SparseMatrix out(rows_, other.cols());
    std::map<std::uint32_t, std::int64_t> acc;
    for (std::size_t j = 0; j < other.cols(); ++j) {
        acc.clear();
        for (const auto& [k, b] : other.column(j))
            for (const auto& [i, a] : columns_[k]) {
                std::int64_t prod = 0;
                if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc[i], prod, &acc[i]))
                    throw IntegrityError("SparseMatrix::multiply: int64 overflow");
            }
        for (const auto& [i, v] : acc)
            if (v != 0) out.columns_[j].emplace_back(i, v);
    }
    return out;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) {
        return std::all_of(c.begin(), c.end(), [](const Entry& e) { return e.second == 0; });
    });
}

IntegerMatrix SparseMatrix::to_dense() const
{
    IntegerMatrix D(rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& [i, v] : columns_[j]) D(i, j) += static_cast<long>(v);
    return D;
}

}  // namespace arrcohom
