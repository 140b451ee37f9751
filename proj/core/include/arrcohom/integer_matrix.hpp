#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace arrcohom {

using Integer = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntegerMatrix operator*(const IntegerMatrix& other) const;
    std::vector<Integer> operator*(const std::vector<Integer>& v) const;

    bool is_zero() const;
    /// True iff every off-diagonal entry is zero.
    bool is_diagonal() const;

    /// JSON array of rows, for debugging dumps.
    std::string to_json() const;

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& A);

/**
 * Column-compressed sparse matrix with machine-integer entries. Boundary
 * operators are stored this way: their entries are ±1 and the number of
 * nonzeros per column is the simplex dimension + 1.
 */
class SparseMatrix {
public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;  // (row, value)

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;

    /// Adds `value` to entry (row, col). Zero results are pruned by finalize().
    void add(std::size_t row, std::size_t col, std::int64_t value);
    /// Sorts each column by row and merges duplicates; call after a batch of add().
    void finalize();

    const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }

    /// this * other. Throws IntegrityError if an entry overflows int64.
    SparseMatrix multiply(const SparseMatrix& other) const;
    bool is_zero() const;
    IntegerMatrix to_dense() const;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

}  // namespace arrcohom
