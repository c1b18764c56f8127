#pragma once

#include "fdg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace fdg {

/// Dense row-major matrix over Q. 0 x n and n x 0 shapes are legal and act as zero maps.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    /// Integer literal rows, mostly for tests: Matrix::from_rows({{1, 2}, {3, 4}}).
    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix column(std::size_t c) const;
    /// Columns [first, first + count).
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix rows_range(std::size_t first, std::size_t count) const;
    /// Copies `block` into this matrix with its top-left corner at (r, c).
    void set_block(std::size_t r, std::size_t c, const Matrix& block);
    Matrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rational& s);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Rational& s, Matrix a);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row, increasing
};

RrefResult rref_rank(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of ker m (one per free column of the rref, free entry 1).
Matrix kernel_basis(const Matrix& m);
/// The pivot columns of m: a basis of its column space drawn from its own columns.
Matrix image_basis(const Matrix& m);
/// Canonical basis of the column space: the transposed nonzero rows of rref(m^T).
Matrix canonical_column_basis(const Matrix& m);

/// Solves a x = b for every column of b. Free variables are set to zero, so equal inputs give
/// equal outputs. Throws ShapeMismatch when a.rows() != b.rows().
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

inline bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }
inline bool is_surjective(const Matrix& m) { return rank(m) == m.rows(); }

/// True iff span(cols of a) contains span(cols of b).
bool column_span_contains(const Matrix& a, const Matrix& b);

} // namespace fdg
