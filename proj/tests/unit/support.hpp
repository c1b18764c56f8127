#pragma once

#include "fdg/complex.hpp"
#include "fdg/matrix.hpp"

#include <map>

namespace testing {

using fdg::Complex;
using fdg::Matrix;

inline Matrix M(std::initializer_list<std::initializer_list<long>> rows)
{
    return Matrix::from_rows(rows);
}

inline Complex cx(const std::map<int, std::size_t>& dims, const std::map<int, Matrix>& d = {})
{
    return Complex::make(dims, d);
}

/// The differential in degree n with its full shape, even where the complex stores nothing.
inline Matrix d_full(const Complex& c, int n)
{
    const Matrix& d = c.d(n);
    if (d.rows() == c.dim(n + 1) && d.cols() == c.dim(n))
        return d;
    return Matrix(c.dim(n + 1), c.dim(n));
}

/// Rank-nullity by hand: dim ker d^n - rank d^{n-1}.
inline std::size_t h_dim(const Complex& c, int n)
{
    const std::size_t kernel = c.dim(n) - fdg::rank(d_full(c, n));
    return kernel - fdg::rank(d_full(c, n - 1));
}

/// The matrix of f in degree n with its full shape.
inline Matrix f_full(const fdg::ChainMap& f, int n)
{
    const Matrix& m = f.at(n);
    if (m.rows() == f.target().dim(n) && m.cols() == f.source().dim(n))
        return m;
    return Matrix(f.target().dim(n), f.source().dim(n));
}

} // namespace testing
