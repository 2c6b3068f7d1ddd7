#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcmdual/errors.hpp"

namespace lcmdual {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix over the rationals, row-major. Every operation is exact;
/// nothing in this header touches floating point.
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix from_int_rows(const std::vector<std::vector<long long>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw DomainError("from_int_rows: ragged row lengths");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    RationalMatrix operator*(const RationalMatrix& other) const {
        if (cols_ != other.rows_)
            throw DomainError("matrix product: inner dimensions disagree");
        RationalMatrix p(rows_, other.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = at(r, k);
                if (a == 0) continue;
                for (std::size_t c = 0; c < other.cols_; ++c)
                    p.at(r, c) += a * other.at(k, c);
            }
        return p;
    }

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact rank via integer-preserving (Bareiss) elimination. Rows are first
/// scaled to integers; scaling by a nonzero rational never changes the rank.
/// Pivot choice: first nonzero below the pivot row, columns left to right.
inline std::size_t rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < cols; ++c)
            scale = lcm(scale, denominator(m.at(r, c)));
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational& q = m.at(r, c);
            a[r][c] = numerator(q) * (scale / denominator(q));
        }
    }

    Integer prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t p = pivot_row;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[pivot_row]);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer t = a[pivot_row][col] * a[i][j] - a[i][col] * a[pivot_row][j];
                Integer q, rem;
                divide_qr(t, prev, q, rem);
                if (rem != 0)
                    throw std::logic_error("bareiss: inexact division");
                a[i][j] = std::move(q);
            }
            a[i][col] = 0;
        }
        prev = a[pivot_row][col];
        ++pivot_row;
    }
    return pivot_row;
}

inline std::size_t kernel_dimension(const RationalMatrix& m) {
    return m.cols() - rank(m);
}

/// True iff A*B is the zero matrix, computed exactly.
inline bool compose_is_zero(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows())
        throw DomainError("compose_is_zero: inner dimensions disagree");
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Rational acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(r, k) * b.at(k, c);
            if (acc != 0) return false;
        }
    return true;
}

} // namespace lcmdual
