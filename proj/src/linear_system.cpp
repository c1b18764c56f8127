#include "fdg/linear_system.hpp"

#include "fdg/errors.hpp"

#include <algorithm>
#include <string>

namespace fdg {

MatrixSystem::MatrixSystem(std::size_t rhs_count) : rhs_count_(rhs_count), inconsistent_(rhs_count, false) {}

MatrixSystem::Block MatrixSystem::add_unknown(std::size_t rows, std::size_t cols)
{
    shapes_.emplace_back(rows, cols);
    offsets_.push_back(offsets_.back() + rows * cols);
    return shapes_.size() - 1;
}

bool MatrixSystem::all_consistent() const
{
    return std::none_of(inconsistent_.begin(), inconsistent_.end(), [](bool b) { return b; });
}

void MatrixSystem::add_equation(const std::vector<Term>& terms, const std::vector<Matrix>& rhs)
{
    if (terms.empty() && rhs.empty())
        return;
    std::size_t eq_rows = 0, eq_cols = 0;
    if (!terms.empty()) {
        eq_rows = terms.front().left.rows();
        eq_cols = terms.front().right.cols();
    } else {
        eq_rows = rhs.front().rows();
        eq_cols = rhs.front().cols();
    }
    if (!rhs.empty() && rhs.size() != rhs_count_)
        throw ShapeMismatch("MatrixSystem: expected " + std::to_string(rhs_count_) + " right-hand sides");
    for (const auto& t : terms) {
        const auto [xr, xc] = shapes_.at(t.block);
        if (t.left.rows() != eq_rows || t.right.cols() != eq_cols || t.left.cols() != xr || t.right.rows() != xc)
            throw ShapeMismatch("MatrixSystem: term shape mismatch");
    }
    for (const auto& c : rhs)
        if (c.rows() != eq_rows || c.cols() != eq_cols)
            throw ShapeMismatch("MatrixSystem: rhs shape mismatch");
    if (eq_rows == 0 || eq_cols == 0)
        return;

    // Nonzero pattern of every left row and right column, computed once per equation block.
    struct Pattern {
        std::vector<std::vector<std::size_t>> left_rows;
        std::vector<std::vector<std::size_t>> right_cols;
    };
    std::vector<Pattern> patterns(terms.size());
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const Term& term = terms[t];
        patterns[t].left_rows.resize(eq_rows);
        for (std::size_t r = 0; r < eq_rows; ++r)
            for (std::size_t i = 0; i < term.left.cols(); ++i)
                if (!is_zero(term.left(r, i)))
                    patterns[t].left_rows[r].push_back(i);
        patterns[t].right_cols.resize(eq_cols);
        for (std::size_t c = 0; c < eq_cols; ++c)
            for (std::size_t j = 0; j < term.right.rows(); ++j)
                if (!is_zero(term.right(j, c)))
                    patterns[t].right_cols[c].push_back(j);
    }

    for (std::size_t r = 0; r < eq_rows; ++r)
        for (std::size_t c = 0; c < eq_cols; ++c) {
            SparseRow row;
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const Term& term = terms[t];
                const std::size_t base = offsets_[term.block];
                const std::size_t xc = shapes_[term.block].second;
                for (std::size_t i : patterns[t].left_rows[r])
                    for (std::size_t j : patterns[t].right_cols[c])
                        row.emplace_back(base + i * xc + j, term.left(r, i) * term.right(j, c));
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            SparseRow merged;
            for (auto& [col, v] : row) {
                if (!merged.empty() && merged.back().first == col)
                    merged.back().second += v;
                else
                    merged.emplace_back(col, std::move(v));
            }
            std::erase_if(merged, [](const auto& e) { return is_zero(e.second); });
            std::vector<Rational> values(rhs_count_);
            if (!rhs.empty())
                for (std::size_t k = 0; k < rhs_count_; ++k)
                    values[k] = rhs[k](r, c);
            insert(std::move(merged), std::move(values));
        }
}

void MatrixSystem::fix_unknown(Block block, const std::vector<Matrix>& value)
{
    const auto [xr, xc] = shapes_.at(block);
    add_equation({Term{block, Matrix::identity(xr), Matrix::identity(xc)}}, value);
}

void MatrixSystem::insert(SparseRow coefficients, std::vector<Rational> rhs)
{
    Rational t;
    while (!coefficients.empty()) {
        auto it = pivots_.find(coefficients.front().first);
        if (it == pivots_.end())
            break;
        const Rational factor = coefficients.front().second;
        const Row& pivot = it->second;
        SparseRow next;
        next.reserve(coefficients.size() + pivot.coefficients.size());
        auto a = coefficients.begin();
        auto b = pivot.coefficients.begin();
        while (a != coefficients.end() || b != pivot.coefficients.end()) {
            if (b == pivot.coefficients.end() || (a != coefficients.end() && a->first < b->first)) {
                next.push_back(std::move(*a));
                ++a;
            } else if (a == coefficients.end() || b->first < a->first) {
                next.emplace_back(b->first, -factor * b->second);
                ++b;
            } else {
                t = factor * b->second;
                a->second -= t;
                if (!is_zero(a->second))
                    next.push_back(std::move(*a));
                ++a;
                ++b;
            }
        }
        coefficients = std::move(next);
        for (std::size_t k = 0; k < rhs_count_; ++k)
            if (!is_zero(pivot.rhs[k])) {
                t = factor * pivot.rhs[k];
                rhs[k] -= t;
            }
    }
    if (coefficients.empty()) {
        for (std::size_t k = 0; k < rhs_count_; ++k)
            if (!is_zero(rhs[k]))
                inconsistent_[k] = true;
        return;
    }
    const Rational inv = 1 / coefficients.front().second;
    for (auto& e : coefficients)
        e.second *= inv;
    for (auto& v : rhs)
        if (!is_zero(v))
            v *= inv;
    const std::size_t lead = coefficients.front().first;
    pivots_.emplace(lead, Row{std::move(coefficients), std::move(rhs)});
}

std::vector<Rational> MatrixSystem::back_substitute(std::size_t k, std::optional<std::size_t> free_column) const
{
    std::vector<Rational> x(unknown_count());
    if (free_column)
        x[*free_column] = 1;
    Rational t;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        const Row& row = it->second;
        Rational value = free_column ? Rational(0) : row.rhs[k];
        for (std::size_t e = 1; e < row.coefficients.size(); ++e) {
            const auto& [col, coef] = row.coefficients[e];
            if (!is_zero(x[col])) {
                t = coef * x[col];
                value -= t;
            }
        }
        x[it->first] = std::move(value);
    }
    return x;
}

std::optional<std::vector<Matrix>> MatrixSystem::solve(std::size_t k) const
{
    if (inconsistent_.at(k))
        return std::nullopt;
    const auto x = back_substitute(k, std::nullopt);
    Matrix flat(x.size(), 1, x);
    return unpack(flat);
}

Matrix MatrixSystem::nullspace() const
{
    const std::size_t n = unknown_count();
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!pivots_.contains(c))
            free.push_back(c);
    Matrix basis(n, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        const auto x = back_substitute(0, free[k]);
        for (std::size_t i = 0; i < n; ++i)
            if (!is_zero(x[i]))
                basis(i, k) = x[i];
    }
    return basis;
}

std::vector<Matrix> MatrixSystem::unpack(const Matrix& flat) const
{
    if (flat.rows() != unknown_count() || flat.cols() != 1)
        throw ShapeMismatch("MatrixSystem::unpack: wrong vector length");
    std::vector<Matrix> blocks;
    blocks.reserve(shapes_.size());
    for (std::size_t b = 0; b < shapes_.size(); ++b) {
        const auto [xr, xc] = shapes_[b];
        Matrix m(xr, xc);
        for (std::size_t i = 0; i < xr; ++i)
            for (std::size_t j = 0; j < xc; ++j)
                m(i, j) = flat(offsets_[b] + i * xc + j, 0);
        blocks.push_back(std::move(m));
    }
    return blocks;
}

Matrix MatrixSystem::pack(const std::vector<Matrix>& blocks) const
{
    if (blocks.size() != shapes_.size())
        throw ShapeMismatch("MatrixSystem::pack: wrong block count");
    Matrix flat(unknown_count(), 1);
    for (std::size_t b = 0; b < shapes_.size(); ++b) {
        const auto [xr, xc] = shapes_[b];
        if (blocks[b].rows() != xr || blocks[b].cols() != xc)
            throw ShapeMismatch("MatrixSystem::pack: block shape mismatch");
        for (std::size_t i = 0; i < xr; ++i)
            for (std::size_t j = 0; j < xc; ++j)
                flat(offsets_[b] + i * xc + j, 0) = blocks[b](i, j);
    }
    return flat;
}

} // namespace fdg
