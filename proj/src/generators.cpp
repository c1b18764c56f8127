#include "fdg/generators.hpp"

#include "fdg/hom.hpp"

#include <algorithm>

namespace fdg {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound)
{
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng.range(-bound, bound);
    return m;
}

Matrix random_invertible(Rng& rng, std::size_t n)
{
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = rng.range(-1, 1);
            upper(j, i) = rng.range(-1, 1);
        }
    return lower * upper;
}

std::map<int, Matrix> random_isomorphism(Rng& rng, const Complex& c)
{
    std::map<int, Matrix> t;
    for (int n = c.lo(); n <= c.hi(); ++n)
        t[n] = random_invertible(rng, c.dim(n));
    return t;
}

Complex random_complex(Rng& rng, const Shape& shape)
{
    std::map<int, std::size_t> dims;
    for (int n = shape.lo; n <= shape.hi; ++n)
        dims[n] = static_cast<std::size_t>(rng.below(shape.max_dim + 1));
    std::map<int, Matrix> d;
    Matrix previous(dims[shape.lo], 0);
    for (int n = shape.lo; n < shape.hi; ++n) {
        // Rows of `annihilator` span the functionals vanishing on im d^{n-1}.
        const Matrix annihilator = kernel_basis(previous.transpose()).transpose();
        Matrix r = random_matrix(rng, dims[n + 1], annihilator.rows());
        // Occasionally force a zero differential so split complexes show up too.
        if (rng.below(5) == 0)
            r = Matrix(dims[n + 1], annihilator.rows());
        Matrix dn = r * annihilator;
        previous = dn;
        d[n] = std::move(dn);
    }
    return Complex::make(dims, d);
}

Complex random_complex(std::uint64_t seed, std::size_t max_dim, int lo, int hi)
{
    Rng rng(seed, 0);
    return random_complex(rng, Shape{max_dim, lo, hi});
}

Complex random_acyclic(Rng& rng, const Shape& shape)
{
    Complex sum;
    const std::size_t half = std::max<std::size_t>(1, shape.max_dim / 2);
    for (int n = shape.lo; n < shape.hi; ++n) {
        const auto mult = static_cast<std::size_t>(rng.below(half + 1));
        if (mult > 0)
            sum = direct_sum(sum, disk(n, mult));
    }
    return conjugate(sum, random_isomorphism(rng, sum));
}

Complex random_chain_complex(Rng& rng, std::size_t max_dim, std::size_t top)
{
    return random_complex(rng, Shape{max_dim, -static_cast<int>(top), 0});
}

ChainMap random_chain_map(Rng& rng, const Complex& m, const Complex& n)
{
    const auto basis = chain_maps_basis(m, n);
    ChainMap f = ChainMap::zero(m, n);
    for (const auto& b : basis) {
        const int c = rng.range(-2, 2);
        if (c != 0)
            f = f + Rational(c) * b;
    }
    return f;
}

ChainMap random_subcomplex(Rng& rng, const Complex& c)
{
    std::map<int, Matrix> spanning;
    Matrix previous;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const std::size_t count = static_cast<std::size_t>(rng.below(c.dim(n) + 1));
        Matrix span = random_matrix(rng, c.dim(n), count);
        if (n > c.lo() && previous.cols() > 0)
            span = hstack(span, c.d(n - 1) * previous);
        previous = span;
        spanning[n] = std::move(span);
    }
    return subcomplex_inclusion(c, spanning);
}

std::map<int, Matrix> random_cocycle(Rng& rng, const Complex& m, const Complex& n, int k)
{
    const Complex hom = hom_complex(m, n);
    if (hom.dim(k) == 0)
        return {};
    const Matrix cycles = kernel_basis(hom.d(k));
    return unpack_graded_map(m, n, k, cycles * random_matrix(rng, cycles.cols(), 1));
}

namespace {

Matrix family_at(const std::map<int, Matrix>& family, int a, std::size_t rows, std::size_t cols)
{
    auto it = family.find(a);
    return it == family.end() ? Matrix(rows, cols) : it->second;
}

void put(Matrix& target, std::size_t r, std::size_t c, const Matrix& block)
{
    if (!block.empty())
        target.set_block(r, c, block);
}

std::pair<int, int> union_span(const Complex& a, const Complex& b)
{
    if (a.is_zero())
        return {b.lo(), b.hi()};
    if (b.is_zero())
        return {a.lo(), a.hi()};
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

} // namespace

ChainMap random_fibration(Rng& rng, const Complex& y, const Complex& k)
{
    const auto sigma = random_cocycle(rng, y, k, 1);
    const auto [lo, hi] = union_span(y, k);
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = lo; n <= hi; ++n) {
        dims[n] = y.dim(n) + k.dim(n);
        Matrix dn(y.dim(n + 1) + k.dim(n + 1), y.dim(n) + k.dim(n));
        if (y.dim(n) > 0 && y.dim(n + 1) > 0)
            put(dn, 0, 0, y.d(n));
        if (k.dim(n) > 0 && k.dim(n + 1) > 0)
            put(dn, y.dim(n + 1), y.dim(n), k.d(n));
        put(dn, y.dim(n + 1), 0, family_at(sigma, n, k.dim(n + 1), y.dim(n)));
        d[n] = std::move(dn);
    }
    const Complex x = Complex::make(dims, d);
    const auto t = random_isomorphism(rng, x);
    const Complex xt = conjugate(x, t);
    std::map<int, Matrix> p;
    for (int n = xt.lo(); n <= xt.hi(); ++n) {
        if (y.dim(n) == 0)
            continue;
        Matrix proj(y.dim(n), x.dim(n));
        proj.set_block(0, 0, Matrix::identity(y.dim(n)));
        p[n] = proj * *inverse(t.at(n));
    }
    return ChainMap::make(xt, y, p);
}

ChainMap random_cofibration(Rng& rng, const Complex& m, const Complex& c)
{
    const auto tau = random_cocycle(rng, c, m, 1);
    const auto [lo, hi] = union_span(m, c);
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = lo; n <= hi; ++n) {
        dims[n] = m.dim(n) + c.dim(n);
        Matrix dn(m.dim(n + 1) + c.dim(n + 1), m.dim(n) + c.dim(n));
        if (m.dim(n) > 0 && m.dim(n + 1) > 0)
            put(dn, 0, 0, m.d(n));
        if (c.dim(n) > 0 && c.dim(n + 1) > 0)
            put(dn, m.dim(n + 1), m.dim(n), c.d(n));
        put(dn, 0, m.dim(n), family_at(tau, n, m.dim(n + 1), c.dim(n)));
        d[n] = std::move(dn);
    }
    const Complex nn = Complex::make(dims, d);
    const auto t = random_isomorphism(rng, nn);
    const Complex nt = conjugate(nn, t);
    std::map<int, Matrix> inc;
    for (int n = nt.lo(); n <= nt.hi(); ++n) {
        if (m.dim(n) == 0)
            continue;
        Matrix e(nn.dim(n), m.dim(n));
        e.set_block(0, 0, Matrix::identity(m.dim(n)));
        inc[n] = t.at(n) * e;
    }
    return ChainMap::make(m, nt, inc);
}

ChainMap random_quasi_iso(Rng& rng, const Shape& shape)
{
    const Shape half{std::max<std::size_t>(1, shape.max_dim / 2), shape.lo, shape.hi};
    const Complex base = random_complex(rng, half);
    switch (rng.below(3)) {
    case 0:
        return random_cofibration(rng, base, random_acyclic(rng, half));
    case 1:
        return random_fibration(rng, base, random_acyclic(rng, half));
    default: {
        const ChainMap p = random_fibration(rng, base, random_acyclic(rng, half));
        const ChainMap i = random_cofibration(rng, base, random_acyclic(rng, half));
        return compose(i, p);
    }
    }
}

Square random_square(Rng& rng, const ChainMap& i, const ChainMap& p)
{
    Square s{ChainMap::zero(i.source(), p.source()), ChainMap::zero(i.target(), p.target())};
    for (const auto& b : commuting_squares_basis(i, p)) {
        const int c = rng.range(-2, 2);
        if (c == 0)
            continue;
        s.f = s.f + Rational(c) * b.f;
        s.g = s.g + Rational(c) * b.g;
    }
    return s;
}

FilteredComplex random_filtered(Rng& rng, const Shape& shape, std::size_t length)
{
    if (length == 0)
        length = 1;
    std::vector<Complex> levels{random_complex(rng, shape)};
    std::vector<ChainMap> inclusions;
    for (std::size_t k = 1; k < length; ++k) {
        inclusions.push_back(random_subcomplex(rng, levels.back()));
        levels.push_back(inclusions.back().source());
    }
    levels.emplace_back();
    inclusions.push_back(ChainMap::zero({}, levels[length - 1]));
    return FilteredComplex::make(std::move(levels), std::move(inclusions));
}

FilteredComplex random_filtered(std::uint64_t seed, std::size_t max_dim, int lo, int hi, std::size_t length)
{
    Rng rng(seed, 0);
    return random_filtered(rng, Shape{max_dim, lo, hi}, length);
}

FilteredMap random_filtered_map(Rng& rng, const FilteredComplex& m, const FilteredComplex& n)
{
    FilteredMap f = FilteredMap::zero(m, n);
    for (const auto& b : filtered_maps_basis(m, n)) {
        const int c = rng.range(-2, 2);
        if (c != 0)
            f = f + Rational(c) * b;
    }
    return f;
}

FilteredMap random_filtered_fibration(Rng& rng, const FilteredComplex& y, const FilteredComplex& k)
{
    const FilteredComplex x = direct_sum(y, k);
    const FilteredMap g = random_filtered_map(rng, k, y);
    std::vector<ChainMap> levels;
    for (std::size_t l = 0; l < std::max(x.length(), y.length()); ++l) {
        const Complex& yl = y.level(l);
        const Complex& kl = k.level(l);
        levels.push_back(projection_first(yl, kl) + compose(g.level(l), projection_second(yl, kl)));
    }
    return FilteredMap::make(x, y, std::move(levels));
}

FilteredSquare random_filtered_square(Rng& rng, const FilteredMap& i, const FilteredMap& p)
{
    FilteredSquare s{FilteredMap::zero(i.source(), p.source()), FilteredMap::zero(i.target(), p.target())};
    for (const auto& b : filtered_commuting_squares_basis(i, p)) {
        const int c = rng.range(-2, 2);
        if (c == 0)
            continue;
        s.f = s.f + Rational(c) * b.f;
        s.g = s.g + Rational(c) * b.g;
    }
    return s;
}

GradedModuleComplex random_graded(Rng& rng, const Shape& shape, std::size_t top_weight, bool torsion_free)
{
    std::vector<Complex> components(top_weight + 1);
    std::vector<ChainMap> t_maps(top_weight);
    components[top_weight] = random_complex(rng, shape);
    for (std::size_t w = top_weight; w > 0; --w) {
        if (torsion_free) {
            t_maps[w - 1] = random_cofibration(rng, components[w], random_complex(rng, shape));
            components[w - 1] = t_maps[w - 1].target();
        } else {
            components[w - 1] = random_complex(rng, shape);
            t_maps[w - 1] = random_chain_map(rng, components[w], components[w - 1]);
        }
    }
    return GradedModuleComplex::make(std::move(components), std::move(t_maps));
}

} // namespace fdg
