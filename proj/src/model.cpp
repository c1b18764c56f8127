#include "fdg/model.hpp"

#include "fdg/errors.hpp"
#include "fdg/hom.hpp"
#include "fdg/linear_system.hpp"
#include "system_util.hpp"

#include <algorithm>

namespace fdg {

bool is_fibration(const ChainMap& p)
{
    return is_degreewise_surjective(p);
}

bool is_trivial_fibration(const ChainMap& p)
{
    return is_fibration(p) && is_acyclic(kernel_inclusion(p).source());
}

bool is_cofibration(const ChainMap& i)
{
    return is_degreewise_injective(i);
}

bool is_trivial_cofibration(const ChainMap& i)
{
    return is_cofibration(i) && is_acyclic(cokernel_projection(i).target());
}

namespace {

using detail::add_chain_conditions;
using detail::component_or_zero;
using detail::DegreewiseUnknown;
using detail::span_of;

void check_square(const ChainMap& i, const ChainMap& p, const Square& s)
{
    if (!(s.f.source() == i.source()) || !(s.f.target() == p.source()) || !(s.g.source() == i.target()) ||
        !(s.g.target() == p.target()))
        throw ShapeMismatch("lifting square: maps do not fit together");
    if (!(compose(s.g, i) == compose(p, s.f)))
        throw NonCommutingSquare("lifting square: g i != p f");
}

} // namespace

std::vector<std::optional<ChainMap>> lift_squares(const ChainMap& i, const ChainMap& p,
                                                  const std::vector<Square>& squares)
{
    for (const auto& s : squares)
        check_square(i, p, s);
    if (squares.empty())
        return {};
    const Complex& m = i.source();
    const Complex& n = i.target();
    const Complex& x = p.source();
    const Complex& y = p.target();
    const auto [lo, hi] = span_of({&m, &n, &x, &y});

    MatrixSystem sys(squares.size());
    DegreewiseUnknown h(sys, n, x, lo, hi);
    add_chain_conditions(sys, h, lo, hi);
    for (int a = lo; a <= hi; ++a) {
        auto b = h.at(a);
        if (m.dim(a) > 0 && x.dim(a) > 0) {
            std::vector<Matrix> rhs;
            for (const auto& s : squares)
                rhs.push_back(component_or_zero(s.f, a));
            if (b)
                sys.add_equation({{*b, Matrix::identity(x.dim(a)), i.at(a)}}, rhs);
            else
                sys.add_equation({}, rhs);
        }
        if (y.dim(a) > 0 && n.dim(a) > 0) {
            std::vector<Matrix> rhs;
            for (const auto& s : squares)
                rhs.push_back(component_or_zero(s.g, a));
            if (b)
                sys.add_equation({{*b, p.at(a), Matrix::identity(n.dim(a))}}, rhs);
            else
                sys.add_equation({}, rhs);
        }
    }
    std::vector<std::optional<ChainMap>> out;
    for (std::size_t k = 0; k < squares.size(); ++k) {
        auto sol = sys.solve(k);
        if (!sol) {
            out.emplace_back(std::nullopt);
            continue;
        }
        out.emplace_back(ChainMap::make(n, x, h.extract(*sol)));
    }
    return out;
}

std::optional<ChainMap> lift_square(const ChainMap& i, const ChainMap& p, const ChainMap& f, const ChainMap& g)
{
    return lift_squares(i, p, {Square{f, g}}).front();
}

std::vector<ChainMap> chain_maps_basis(const Complex& m, const Complex& n)
{
    const auto [lo, hi] = span_of({&m, &n});
    MatrixSystem sys;
    DegreewiseUnknown f(sys, m, n, lo, hi);
    add_chain_conditions(sys, f, lo, hi);
    const Matrix basis = sys.nullspace();
    std::vector<ChainMap> out;
    for (std::size_t k = 0; k < basis.cols(); ++k)
        out.push_back(ChainMap::make(m, n, f.extract(sys.unpack(basis.column(k)))));
    return out;
}

std::vector<Square> commuting_squares_basis(const ChainMap& i, const ChainMap& p)
{
    const Complex& m = i.source();
    const Complex& n = i.target();
    const Complex& x = p.source();
    const Complex& y = p.target();
    const auto [lo, hi] = span_of({&m, &n, &x, &y});

    MatrixSystem sys;
    DegreewiseUnknown f(sys, m, x, lo, hi);
    DegreewiseUnknown g(sys, n, y, lo, hi);
    add_chain_conditions(sys, f, lo, hi);
    add_chain_conditions(sys, g, lo, hi);
    // g i - p f = 0
    for (int a = lo; a <= hi; ++a) {
        if (y.dim(a) == 0 || m.dim(a) == 0)
            continue;
        std::vector<MatrixSystem::Term> terms;
        if (auto b = g.at(a))
            terms.push_back({*b, Matrix::identity(y.dim(a)), i.at(a)});
        if (auto b = f.at(a))
            terms.push_back({*b, -p.at(a), Matrix::identity(m.dim(a))});
        sys.add_equation(terms);
    }
    const Matrix basis = sys.nullspace();
    std::vector<Square> squares;
    for (std::size_t k = 0; k < basis.cols(); ++k) {
        const auto blocks = sys.unpack(basis.column(k));
        squares.push_back({ChainMap::make(m, x, f.extract(blocks)), ChainMap::make(n, y, g.extract(blocks))});
    }
    return squares;
}

std::map<int, Matrix> contracting_homotopy(const Complex& k)
{
    if (!is_acyclic(k))
        throw NotAcyclic("contracting_homotopy: complex has nonzero cohomology");
    MatrixSystem sys;
    std::map<int, MatrixSystem::Block> h;
    for (int n = k.lo(); n <= k.hi(); ++n)
        if (k.dim(n) > 0 && k.dim(n - 1) > 0)
            h[n] = sys.add_unknown(k.dim(n - 1), k.dim(n));
    for (int n = k.lo(); n <= k.hi(); ++n) {
        const std::size_t dim = k.dim(n);
        if (dim == 0)
            continue;
        std::vector<MatrixSystem::Term> terms;
        if (auto it = h.find(n); it != h.end())
            terms.push_back({it->second, k.d(n - 1), Matrix::identity(dim)});
        if (auto it = h.find(n + 1); it != h.end())
            terms.push_back({it->second, Matrix::identity(dim), k.d(n)});
        sys.add_equation(terms, {Matrix::identity(dim)});
    }
    auto sol = sys.solve();
    if (!sol)
        throw NotAcyclic("contracting_homotopy: no solution");
    std::map<int, Matrix> out;
    for (int n = k.lo(); n <= k.hi() + 1; ++n) {
        auto it = h.find(n);
        out[n] = it == h.end() ? Matrix(k.dim(n - 1), k.dim(n)) : (*sol)[it->second];
    }
    return out;
}

bool is_contracting_homotopy(const Complex& k, const std::map<int, Matrix>& h)
{
    auto h_at = [&](int n) {
        auto it = h.find(n);
        return it == h.end() ? Matrix(k.dim(n - 1), k.dim(n)) : it->second;
    };
    for (int n = k.lo(); n <= k.hi(); ++n) {
        const std::size_t dim = k.dim(n);
        Matrix sum(dim, dim);
        const Matrix hn = h_at(n);
        const Matrix hn1 = h_at(n + 1);
        if (hn.rows() != k.dim(n - 1) || hn.cols() != dim || hn1.rows() != dim || hn1.cols() != k.dim(n + 1))
            return false;
        if (k.dim(n - 1) > 0)
            sum += k.d(n - 1) * hn;
        if (k.dim(n + 1) > 0)
            sum += hn1 * k.d(n);
        if (sum != Matrix::identity(dim))
            return false;
    }
    return true;
}

ChainMap disk_cover(const Complex& n)
{
    if (n.is_zero())
        return ChainMap::zero({}, {});
    // P^j = N^j (bottom of D(j)) (+) N^{j-1} (top of D(j-1)).
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d;
    std::map<int, Matrix> ev;
    for (int j = n.lo(); j <= n.hi() + 1; ++j) {
        dims[j] = n.dim(j) + n.dim(j - 1);
        Matrix dj(n.dim(j + 1) + n.dim(j), n.dim(j) + n.dim(j - 1));
        dj.set_block(n.dim(j + 1), 0, Matrix::identity(n.dim(j)));
        d[j] = std::move(dj);
        Matrix e(n.dim(j), n.dim(j) + n.dim(j - 1));
        e.set_block(0, 0, Matrix::identity(n.dim(j)));
        if (n.dim(j) > 0 && n.dim(j - 1) > 0)
            e.set_block(0, n.dim(j), n.d(j - 1));
        ev[j] = std::move(e);
    }
    d.erase(n.hi() + 1);
    return ChainMap::make(Complex::make(dims, d), n, ev);
}

std::pair<ChainMap, ChainMap> factor_trivcof_fib(const ChainMap& f)
{
    const Complex& m = f.source();
    const Complex& n = f.target();
    const ChainMap ev = disk_cover(n);
    const Complex& p = ev.source();
    ChainMap first = inclusion_first(m, p);
    const Complex& sum = first.target();
    std::map<int, Matrix> comp;
    for (int a = std::min(sum.lo(), n.lo()); a <= std::max(sum.hi(), n.hi()); ++a) {
        if (sum.dim(a) == 0 || n.dim(a) == 0)
            continue;
        Matrix c(n.dim(a), sum.dim(a));
        if (m.dim(a) > 0)
            c.set_block(0, 0, f.at(a));
        if (p.dim(a) > 0)
            c.set_block(0, m.dim(a), ev.at(a));
        comp[a] = std::move(c);
    }
    ChainMap second = ChainMap::make(sum, n, comp);
    return {std::move(first), std::move(second)};
}

std::pair<ChainMap, ChainMap> factor_cof_trivfib(const ChainMap& f)
{
    const Complex& m = f.source();
    const Complex& n = f.target();
    const auto [lo0, hi] = span_of({&m, &n});
    const int lo = m.is_zero() ? lo0 : std::min(lo0, m.lo() - 1);
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d, incl, proj;
    for (int a = lo; a <= hi; ++a) {
        const std::size_t m0 = m.dim(a), m1 = m.dim(a + 1), m2 = m.dim(a + 2), n0 = n.dim(a), n1 = n.dim(a + 1);
        dims[a] = m0 + m1 + n0;
        // d(x, y, z) = (d x - y, -d y, f y + d z)
        Matrix da(m1 + m2 + n1, m0 + m1 + n0);
        if (m0 > 0 && m1 > 0)
            da.set_block(0, 0, m.d(a));
        da.set_block(0, m0, -Matrix::identity(m1));
        if (m1 > 0 && m2 > 0)
            da.set_block(m1, m0, -m.d(a + 1));
        if (m1 > 0 && n1 > 0)
            da.set_block(m1 + m2, m0, f.at(a + 1));
        if (n0 > 0 && n1 > 0)
            da.set_block(m1 + m2, m0 + m1, n.d(a));
        d[a] = std::move(da);
        Matrix ia(m0 + m1 + n0, m0);
        ia.set_block(0, 0, Matrix::identity(m0));
        incl[a] = std::move(ia);
        Matrix pa(n0, m0 + m1 + n0);
        if (m0 > 0 && n0 > 0)
            pa.set_block(0, 0, f.at(a));
        pa.set_block(0, m0 + m1, Matrix::identity(n0));
        proj[a] = std::move(pa);
    }
    d.erase(hi);
    Complex cyl = Complex::make(dims, d);
    ChainMap first = ChainMap::make(m, cyl, incl);
    ChainMap second = ChainMap::make(cyl, n, proj);
    return {std::move(first), std::move(second)};
}

ChainMap precomposition(const ChainMap& theta, const Complex& c)
{
    const Complex& a = theta.source();
    const Complex& b = theta.target();
    const Complex hom_b = hom_complex(b, c);
    const Complex hom_a = hom_complex(a, c);
    std::map<int, Matrix> comp;
    const auto [lo, hi] = span_of({&hom_a, &hom_b});
    for (int k = lo; k <= hi; ++k) {
        const std::size_t cols = hom_dim(b, c, k);
        const std::size_t rows = hom_dim(a, c, k);
        if (rows == 0 || cols == 0)
            continue;
        Matrix mk(rows, cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Matrix unit(cols, 1);
            unit(j, 0) = 1;
            const auto g = unpack_graded_map(b, c, k, unit);
            std::map<int, Matrix> gt;
            for (const auto& [deg, ga] : g)
                if (a.dim(deg) > 0)
                    gt[deg] = ga * theta.at(deg);
            mk.set_block(0, j, pack_graded_map(a, c, k, gt));
        }
        comp[k] = std::move(mk);
    }
    return ChainMap::make(hom_b, hom_a, comp);
}

std::size_t obstruction_group(const ChainMap& theta, const Complex& c)
{
    return cohomology_dim(cone(precomposition(theta, c)), 2);
}

std::pair<int, int> generator_range(const Complex& a, const Complex& b)
{
    const auto [lo, hi] = span_of({&a, &b});
    if (lo > hi)
        return {0, -1};
    return {lo - 1, hi};
}

ChainMap disk_generator(int n)
{
    return ChainMap::zero({}, disk(n));
}

ChainMap boundary_generator(int n)
{
    return ChainMap::make(sphere(n + 1), disk(n), {{n + 1, Matrix::identity(1)}});
}

namespace {

bool lifts_against(const ChainMap& generator, const ChainMap& p)
{
    const auto squares = commuting_squares_basis(generator, p);
    const auto lifts = lift_squares(generator, p, squares);
    return std::all_of(lifts.begin(), lifts.end(), [](const auto& h) { return h.has_value(); });
}

} // namespace

bool lifts_against_disk_generators(const ChainMap& p)
{
    const auto [lo, hi] = generator_range(p.source(), p.target());
    for (int n = lo; n <= hi; ++n)
        if (!lifts_against(disk_generator(n), p))
            return false;
    return true;
}

bool lifts_against_boundary_generators(const ChainMap& p)
{
    const auto [lo, hi] = generator_range(p.source(), p.target());
    for (int n = lo; n <= hi; ++n)
        if (!lifts_against(boundary_generator(n), p))
            return false;
    return true;
}

} // namespace fdg
