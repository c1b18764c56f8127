#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fdg/errors.hpp"
#include "fdg/linear_system.hpp"
#include "fdg/matrix.hpp"

#include <random>

using namespace fdg;

namespace {

// Rank by the largest nonvanishing minor, computed with cofactor expansion. Only for tiny inputs.
Rational det(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0)
            continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = m(r, c);
        total += (j % 2 == 0 ? 1 : -1) * m(0, j) * det(minor);
    }
    return total;
}

bool has_nonzero_minor(const Matrix& m, std::size_t k)
{
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
        do {
            Matrix sub(k, k);
            std::size_t r2 = 0;
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (!rsel[r])
                    continue;
                std::size_t c2 = 0;
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (csel[c])
                        sub(r2, c2++) = m(r, c);
                ++r2;
            }
            if (det(sub) != 0)
                return true;
        } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    return false;
}

std::size_t minor_rank(const Matrix& m)
{
    std::size_t r = 0;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k)
        if (has_nonzero_minor(m, k))
            r = k;
    return r;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<int> dist(-2, 2);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

} // namespace

TEST_CASE("rationals parse and print in lowest terms")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("4/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rref of identity, rank-one and empty matrices")
{
    auto id = rref_rank(Matrix::identity(2));
    CHECK(id.reduced == Matrix::identity(2));
    CHECK(id.rank == 2);

    auto r = rref_rank(Matrix::from_rows({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == Matrix::from_rows({{1, 2}, {0, 0}}));

    auto e = rref_rank(Matrix(0, 3));
    CHECK(e.rank == 0);
    CHECK(e.reduced.rows() == 0);
    CHECK(e.reduced.cols() == 3);
}

TEST_CASE("kernel bases")
{
    CHECK(kernel_basis(Matrix::identity(3)).cols() == 0);
    const Matrix k2 = kernel_basis(Matrix(1, 2));
    CHECK(k2.cols() == 2);
    CHECK(rank(k2) == 2);
    const Matrix k = kernel_basis(Matrix::from_rows({{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK(k(0, 0) != 0);
}

TEST_CASE("solve_linear examples")
{
    const Matrix b = Matrix::from_rows({{3}, {-1}});
    CHECK(*solve_linear(Matrix::identity(2), b) == b);
    CHECK(*solve_linear(Matrix::from_rows({{1, 1}}), Matrix(1, 1)) == Matrix(2, 1));
    CHECK_FALSE(solve_linear(Matrix(1, 1), Matrix::from_rows({{1}})).has_value());
    CHECK_THROWS_AS(solve_linear(Matrix(2, 2), Matrix(3, 1)), ShapeMismatch);
}

TEST_CASE("zero-sized shapes act as zero maps")
{
    const Matrix a(3, 0), b(0, 2);
    const Matrix p = a * b;
    CHECK(p.rows() == 3);
    CHECK(p.cols() == 2);
    CHECK(p.is_zero());
    CHECK(rank(a) == 0);
    CHECK(kernel_basis(b).cols() == 2);
}

TEST_CASE("rank agrees with a minor-based oracle and with the transpose")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = rng() % 5, c = rng() % 5;
        const Matrix m = random_matrix(rng, r, c);
        const std::size_t rk = rank(m);
        CHECK(rk == minor_rank(m));
        CHECK(rk == rank(m.transpose()));
        const Matrix k = kernel_basis(m);
        CHECK(k.cols() + rk == c);
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
        CHECK(image_basis(m).cols() == rk);
        CHECK(canonical_column_basis(m).cols() == rk);
    }
}

TEST_CASE("solve_linear present iff rank(a) = rank([a|b]); solutions are deterministic")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const Matrix a = random_matrix(rng, r, c);
        const Matrix b = random_matrix(rng, r, 1);
        const auto x = solve_linear(a, b);
        CHECK(x.has_value() == (rank(a) == rank(hstack(a, b))));
        if (x) {
            CHECK(a * *x == b);
            CHECK(*solve_linear(a, b) == *x);
        }
    }
}

TEST_CASE("inverse")
{
    const Matrix m = Matrix::from_rows({{2, 1}, {1, 1}});
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("MatrixSystem agrees with solve_linear on single-block systems")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const Matrix a = random_matrix(rng, r, c);
        const Matrix b1 = random_matrix(rng, r, 1);
        const Matrix b2 = a * random_matrix(rng, c, 1); // always consistent
        MatrixSystem sys(2);
        const auto x = sys.add_unknown(c, 1);
        sys.add_equation({{x, a, Matrix::identity(1)}}, {b1, b2});
        const auto direct = solve_linear(a, b1);
        const auto s1 = sys.solve(0);
        CHECK(s1.has_value() == direct.has_value());
        if (s1 && direct)
            CHECK((*s1)[x] == *direct);
        const auto s2 = sys.solve(1);
        REQUIRE(s2);
        CHECK(a * (*s2)[x] == b2);
        CHECK((*s2)[x] == *solve_linear(a, b2));
        const Matrix ns = sys.nullspace();
        CHECK(ns.cols() == c - rank(a));
        CHECK((a * ns).is_zero());
    }
}

TEST_CASE("MatrixSystem with two-sided terms: A X B = C")
{
    const Matrix a = Matrix::from_rows({{1, 0}, {0, 2}});
    const Matrix b = Matrix::from_rows({{1, 1}});
    MatrixSystem sys;
    const auto x = sys.add_unknown(2, 1);
    const Matrix c = Matrix::from_rows({{3, 3}, {4, 4}});
    sys.add_equation({{x, a, b}}, {c});
    const auto s = sys.solve();
    REQUIRE(s);
    CHECK(a * (*s)[x] * b == c);
    sys.add_equation({{x, Matrix::identity(2), Matrix::identity(1)}}, {Matrix::from_rows({{0}, {0}})});
    CHECK_FALSE(sys.solve().has_value());
}
