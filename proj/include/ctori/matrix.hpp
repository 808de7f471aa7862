// SPDX-License-Identifier: MIT
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctori {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }
    static Matrix from_rows(std::size_t cols, const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Columns [first, first + count).
    Matrix column_block(std::size_t first, std::size_t count) const {
        Matrix m(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
        return m;
    }
    Matrix row_block(std::size_t first, std::size_t count) const {
        Matrix m(count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
        return m;
    }
    /// Horizontal concatenation.
    Matrix hcat(const Matrix& rhs) const {
        if (rhs.rows_ != rows_) throw std::invalid_argument("hcat row mismatch");
        Matrix m(rows_, cols_ + rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, cols_ + j) = rhs(i, j);
        }
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& k) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
    }
    /// col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const T& k) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, j) += a * rhs(k, j);
            }
        return m;
    }
    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    Matrix operator+(const Matrix& rhs) const {
        check_same(rhs);
        Matrix m(*this);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += rhs.data_[k];
        return m;
    }
    Matrix operator-(const Matrix& rhs) const {
        check_same(rhs);
        Matrix m(*this);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= rhs.data_[k];
        return m;
    }
    Matrix operator-() const {
        Matrix m(*this);
        for (auto& x : m.data_) x = -x;
        return m;
    }
    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
    bool operator<(const Matrix& rhs) const {
        if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
        if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
        return data_ < rhs.data_;
    }

    const std::vector<T>& data() const { return data_; }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = static_cast<U>((*this)(i, j));
        return m;
    }

private:
    void check_same(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using SmallMatrix = Matrix<long long>;
using RatMatrix = Matrix<Rational>;

using IntVec = std::vector<BigInt>;
using SmallVec = std::vector<long long>;
using RatVec = std::vector<Rational>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << ']';
}

IntMatrix to_big(const SmallMatrix& m);
SmallMatrix to_small(const IntMatrix& m);
IntVec to_big(const SmallVec& v);
SmallVec to_small(const IntVec& v);
RatVec to_rational(const SmallVec& v);

std::string to_string(const Rational& r);
std::string to_string(const RatVec& v);
std::string to_string(const SmallVec& v);
std::string to_string(const IntVec& v);

/// Solve A x = b over Q when A has full column rank. Throws if inconsistent.
RatVec solve_rational(const RatMatrix& a, const RatVec& b);
/// Inverse of a square rational matrix; throws if singular.
RatMatrix inverse(const RatMatrix& a);
/// Rank over Q.
std::size_t rank(const RatMatrix& a);

}  // namespace ctori
