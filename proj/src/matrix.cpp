#include "fdg/matrix.hpp"

#include "fdg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace fdg {

Rational parse_rational(std::string_view text)
{
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view body = text;
    if (!body.empty() && body.front() == '-')
        body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (text.front() == '-')
        p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows * cols)
        throw ShapeMismatch("matrix entry count " + std::to_string(entries_.size()) + " != " +
                            std::to_string(rows) + "x" + std::to_string(cols));
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw ShapeMismatch("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return fdg::is_zero(q); });
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::column(std::size_t c) const
{
    return columns(c, 1);
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const
{
    return block(0, first, rows_, count);
}

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const
{
    return block(first, 0, count, cols_);
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const
{
    if (r + rows > rows_ || c + cols > cols_)
        throw ShapeMismatch("block out of range");
    Matrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b(i, j) = (*this)(r + i, c + j);
    return b;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block)
{
    if (r + block.rows() > rows_ || c + block.cols() > cols_)
        throw ShapeMismatch("set_block out of range");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            (*this)(r + i, c + j) = block(i, j);
}

Matrix& Matrix::operator+=(const Matrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeMismatch("matrix sum shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!fdg::is_zero(other.entries_[k]))
            entries_[k] += other.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeMismatch("matrix difference shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!fdg::is_zero(other.entries_[k]))
            entries_[k] -= other.entries_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s)
{
    for (auto& e : entries_)
        e *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw ShapeMismatch("product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix p(a.rows(), b.cols());
    Rational t;
    // Structure maps are mostly zero, so skip zero factors on both sides.
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (is_zero(aik))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (is_zero(bkj))
                    continue;
                t = aik * bkj;
                p(i, j) += t;
            }
        }
    return p;
}

Matrix operator+(Matrix a, const Matrix& b)
{
    a += b;
    return a;
}

Matrix operator-(Matrix a, const Matrix& b)
{
    a -= b;
    return a;
}

Matrix operator-(Matrix a)
{
    a *= Rational(-1);
    return a;
}

Matrix operator*(const Rational& s, Matrix a)
{
    a *= s;
    return a;
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw ShapeMismatch("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw ShapeMismatch("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b)
{
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

RrefResult rref_rank(const Matrix& input)
{
    RrefResult out{input, 0, {}};
    Matrix& m = out.reduced;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    Rational factor, t;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && is_zero(m(pivot, c)))
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols; ++j)
                swap(m(r, j), m(pivot, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!is_zero(m(r, j)))
                m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (is_zero(m(r, j)))
                    continue;
                t = factor * m(r, j);
                m(i, j) -= t;
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const Matrix& m)
{
    if (m.empty())
        return 0;
    return rref_rank(m).rank;
}

Matrix kernel_basis(const Matrix& m)
{
    const RrefResult rr = rref_rank(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots)
        is_pivot[p] = true;
    Matrix basis(n, n - rr.rank);
    std::size_t k = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        basis(free, k) = 1;
        for (std::size_t i = 0; i < rr.rank; ++i)
            basis(rr.pivots[i], k) = -rr.reduced(i, free);
        ++k;
    }
    return basis;
}

Matrix image_basis(const Matrix& m)
{
    const RrefResult rr = rref_rank(m);
    Matrix basis(m.rows(), rr.rank);
    for (std::size_t k = 0; k < rr.rank; ++k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            basis(i, k) = m(i, rr.pivots[k]);
    return basis;
}

Matrix canonical_column_basis(const Matrix& m)
{
    const RrefResult rr = rref_rank(m.transpose());
    return rr.reduced.rows_range(0, rr.rank).transpose();
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw ShapeMismatch("solve_linear: a has " + std::to_string(a.rows()) + " rows, b has " +
                            std::to_string(b.rows()));
    const std::size_t n = a.cols();
    const RrefResult rr = rref_rank(hstack(a, b));
    // Consistent iff no pivot lands in the augmented part.
    std::size_t coef_rank = 0;
    while (coef_rank < rr.rank && rr.pivots[coef_rank] < n)
        ++coef_rank;
    if (coef_rank != rr.rank)
        return std::nullopt;
    Matrix x(n, b.cols());
    for (std::size_t i = 0; i < coef_rank; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(rr.pivots[i], j) = rr.reduced(i, n + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    if (rank(m) != m.rows())
        return std::nullopt;
    return solve_linear(m, Matrix::identity(m.rows()));
}

bool column_span_contains(const Matrix& a, const Matrix& b)
{
    if (b.cols() == 0)
        return true;
    return solve_linear(a, b).has_value();
}

} // namespace fdg
