#include "fdg/complex.hpp"

#include "fdg/errors.hpp"

#include <algorithm>
#include <string>

namespace fdg {

namespace {

const Matrix& empty_matrix()
{
    static const Matrix m;
    return m;
}

std::string deg(int n)
{
    return "degree " + std::to_string(n);
}

/// Smallest range covering both supports; empty when both complexes are zero.
std::pair<int, int> union_range(const Complex& a, const Complex& b)
{
    if (a.is_zero())
        return {b.lo(), b.hi()};
    if (b.is_zero())
        return {a.lo(), a.hi()};
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

} // namespace

Complex Complex::make(const std::map<int, std::size_t>& dims, const std::map<int, Matrix>& differentials)
{
    Complex c;
    bool any = false;
    for (const auto& [n, k] : dims) {
        if (k == 0)
            continue;
        if (!any) {
            c.lo_ = c.hi_ = n;
            any = true;
        }
        c.lo_ = std::min(c.lo_, n);
        c.hi_ = std::max(c.hi_, n);
    }
    if (!any) {
        c.lo_ = 0;
        c.hi_ = -1;
    }
    auto dim_of = [&](int n) -> std::size_t {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    };
    if (!c.is_zero()) {
        c.dims_.resize(static_cast<std::size_t>(c.hi_ - c.lo_ + 1));
        for (int n = c.lo_; n <= c.hi_; ++n)
            c.dims_[static_cast<std::size_t>(n - c.lo_)] = dim_of(n);
        for (int n = c.lo_ - 1; n <= c.hi_; ++n)
            c.d_.emplace_back(dim_of(n + 1), dim_of(n));
    }
    for (const auto& [n, m] : differentials) {
        if (m.rows() != dim_of(n + 1) || m.cols() != dim_of(n))
            throw ShapeMismatch("differential in " + deg(n) + " has shape " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " + std::to_string(dim_of(n + 1)) + "x" +
                                std::to_string(dim_of(n)));
        if (m.empty())
            continue;
        c.d_[static_cast<std::size_t>(n - (c.lo_ - 1))] = m;
    }
    for (int n = c.lo_; n < c.hi_; ++n)
        if (!(c.d(n + 1) * c.d(n)).is_zero())
            throw NotAComplex("d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " != 0");
    return c;
}

Complex make_complex(const std::map<int, std::size_t>& dims, const std::map<int, Matrix>& differentials)
{
    return Complex::make(dims, differentials);
}

std::size_t Complex::dim(int n) const noexcept
{
    if (n < lo_ || n > hi_)
        return 0;
    return dims_[static_cast<std::size_t>(n - lo_)];
}

const Matrix& Complex::d(int n) const
{
    const long k = static_cast<long>(n) - (lo_ - 1);
    if (is_zero() || k < 0 || k >= static_cast<long>(d_.size()))
        return empty_matrix();
    return d_[static_cast<std::size_t>(k)];
}

std::size_t Complex::total_dim() const
{
    std::size_t t = 0;
    for (auto k : dims_)
        t += k;
    return t;
}

std::map<int, std::size_t> Complex::dims() const
{
    std::map<int, std::size_t> out;
    for (int n = lo_; n <= hi_; ++n)
        if (dim(n) > 0)
            out[n] = dim(n);
    return out;
}

Complex generator(GeneratorKind kind, int n, std::size_t multiplicity)
{
    if (kind == GeneratorKind::sphere)
        return Complex::make({{n, multiplicity}}, {});
    return Complex::make({{n, multiplicity}, {n + 1, multiplicity}}, {{n, Matrix::identity(multiplicity)}});
}

Complex shift(const Complex& m, int k)
{
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = m.lo(); n <= m.hi(); ++n) {
        dims[n - k] = m.dim(n);
        d[n - k] = m.d(n);
    }
    return Complex::make(dims, d);
}

Complex suspension(const Complex& m)
{
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = m.lo(); n <= m.hi(); ++n) {
        dims[n - 1] = m.dim(n);
        d[n - 1] = -m.d(n);
    }
    return Complex::make(dims, d);
}

Complex direct_sum(const Complex& a, const Complex& b)
{
    const auto [lo, hi] = union_range(a, b);
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = lo; n <= hi; ++n) {
        dims[n] = a.dim(n) + b.dim(n);
        Matrix m(a.dim(n + 1) + b.dim(n + 1), a.dim(n) + b.dim(n));
        m.set_block(0, 0, a.d(n).empty() ? Matrix(a.dim(n + 1), a.dim(n)) : a.d(n));
        m.set_block(a.dim(n + 1), a.dim(n), b.d(n).empty() ? Matrix(b.dim(n + 1), b.dim(n)) : b.d(n));
        d[n] = std::move(m);
    }
    return Complex::make(dims, d);
}

Complex conjugate(const Complex& c, const std::map<int, Matrix>& iso)
{
    auto t = [&](int n) {
        auto it = iso.find(n);
        return it == iso.end() ? Matrix::identity(c.dim(n)) : it->second;
    };
    std::map<int, Matrix> d;
    for (int n = c.lo(); n < c.hi(); ++n) {
        auto inv = inverse(t(n));
        if (!inv)
            throw ShapeMismatch("conjugate: matrix in " + deg(n) + " is not invertible");
        d[n] = t(n + 1) * c.d(n) * *inv;
    }
    return Complex::make(c.dims(), d);
}

bool is_isomorphic(const Complex& a, const Complex& b)
{
    if (a.dims() != b.dims())
        return false;
    const auto [lo, hi] = union_range(a, b);
    for (int n = lo; n <= hi; ++n)
        if (rank(a.d(n)) != rank(b.d(n)))
            return false;
    return true;
}

ChainMap ChainMap::make(Complex source, Complex target, const std::map<int, Matrix>& components)
{
    ChainMap f;
    std::tie(f.lo_, f.hi_) = union_range(source, target);
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    for (int n = f.lo_; n <= f.hi_; ++n)
        f.f_.emplace_back(f.target_.dim(n), f.source_.dim(n));
    for (const auto& [n, m] : components) {
        if (m.rows() != f.target_.dim(n) || m.cols() != f.source_.dim(n))
            throw ShapeMismatch("chain map component in " + deg(n) + " has shape " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " + std::to_string(f.target_.dim(n)) + "x" +
                                std::to_string(f.source_.dim(n)));
        if (m.empty())
            continue;
        f.f_[static_cast<std::size_t>(n - f.lo_)] = m;
    }
    for (int n = f.lo_ - 1; n <= f.hi_; ++n)
        if (f.at(n + 1) * f.source_.d(n) != f.target_.d(n) * f.at(n))
            throw NotAChainMap("f d != d f in " + deg(n));
    return f;
}

ChainMap ChainMap::identity(const Complex& c)
{
    std::map<int, Matrix> comp;
    for (int n = c.lo(); n <= c.hi(); ++n)
        comp[n] = Matrix::identity(c.dim(n));
    return make(c, c, comp);
}

ChainMap ChainMap::zero(Complex source, Complex target)
{
    return make(std::move(source), std::move(target), {});
}

const Matrix& ChainMap::at(int n) const
{
    if (n < lo_ || n > hi_)
        return empty_matrix();
    return f_[static_cast<std::size_t>(n - lo_)];
}

std::map<int, Matrix> ChainMap::components() const
{
    std::map<int, Matrix> out;
    for (int n = lo_; n <= hi_; ++n)
        if (!at(n).empty())
            out[n] = at(n);
    return out;
}

ChainMap shift(const ChainMap& f, int k)
{
    std::map<int, Matrix> comp;
    for (int n = f.lo(); n <= f.hi(); ++n)
        comp[n - k] = f.at(n);
    return ChainMap::make(shift(f.source(), k), shift(f.target(), k), comp);
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    if (!(f.target() == g.source()))
        throw ShapeMismatch("compose: target of f is not the source of g");
    const auto [lo, hi] = union_range(f.source(), g.target());
    std::map<int, Matrix> comp;
    for (int n = lo; n <= hi; ++n) {
        if (f.source().dim(n) == 0 || g.target().dim(n) == 0)
            continue;
        if (g.source().dim(n) == 0)
            continue;
        comp[n] = g.at(n) * f.at(n);
    }
    return ChainMap::make(f.source(), g.target(), comp);
}

namespace {

ChainMap combine(const ChainMap& a, const ChainMap& b, bool subtract)
{
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
        throw ShapeMismatch("chain map sum: differing source or target");
    std::map<int, Matrix> comp;
    for (int n = a.lo(); n <= a.hi(); ++n)
        comp[n] = subtract ? a.at(n) - b.at(n) : a.at(n) + b.at(n);
    return ChainMap::make(a.source(), a.target(), comp);
}

} // namespace

ChainMap operator+(const ChainMap& a, const ChainMap& b)
{
    return combine(a, b, false);
}

ChainMap operator-(const ChainMap& a, const ChainMap& b)
{
    return combine(a, b, true);
}

ChainMap operator*(const Rational& s, const ChainMap& f)
{
    std::map<int, Matrix> comp;
    for (int n = f.lo(); n <= f.hi(); ++n)
        comp[n] = s * f.at(n);
    return ChainMap::make(f.source(), f.target(), comp);
}

ChainMap direct_sum(const ChainMap& a, const ChainMap& b)
{
    Complex src = direct_sum(a.source(), b.source());
    Complex tgt = direct_sum(a.target(), b.target());
    std::map<int, Matrix> comp;
    const auto [lo, hi] = union_range(src, tgt);
    for (int n = lo; n <= hi; ++n) {
        Matrix m(tgt.dim(n), src.dim(n));
        if (!a.at(n).empty())
            m.set_block(0, 0, a.at(n));
        if (!b.at(n).empty())
            m.set_block(a.target().dim(n), a.source().dim(n), b.at(n));
        comp[n] = std::move(m);
    }
    return ChainMap::make(std::move(src), std::move(tgt), comp);
}

ChainMap inclusion_first(const Complex& a, const Complex& b)
{
    Complex s = direct_sum(a, b);
    std::map<int, Matrix> comp;
    for (int n = a.lo(); n <= a.hi(); ++n) {
        Matrix m(s.dim(n), a.dim(n));
        m.set_block(0, 0, Matrix::identity(a.dim(n)));
        comp[n] = std::move(m);
    }
    return ChainMap::make(a, std::move(s), comp);
}

ChainMap inclusion_second(const Complex& a, const Complex& b)
{
    Complex s = direct_sum(a, b);
    std::map<int, Matrix> comp;
    for (int n = b.lo(); n <= b.hi(); ++n) {
        Matrix m(s.dim(n), b.dim(n));
        m.set_block(a.dim(n), 0, Matrix::identity(b.dim(n)));
        comp[n] = std::move(m);
    }
    return ChainMap::make(b, std::move(s), comp);
}

ChainMap projection_first(const Complex& a, const Complex& b)
{
    Complex s = direct_sum(a, b);
    std::map<int, Matrix> comp;
    for (int n = a.lo(); n <= a.hi(); ++n) {
        Matrix m(a.dim(n), s.dim(n));
        m.set_block(0, 0, Matrix::identity(a.dim(n)));
        comp[n] = std::move(m);
    }
    return ChainMap::make(std::move(s), a, comp);
}

ChainMap projection_second(const Complex& a, const Complex& b)
{
    Complex s = direct_sum(a, b);
    std::map<int, Matrix> comp;
    for (int n = b.lo(); n <= b.hi(); ++n) {
        Matrix m(b.dim(n), s.dim(n));
        m.set_block(0, a.dim(n), Matrix::identity(b.dim(n)));
        comp[n] = std::move(m);
    }
    return ChainMap::make(std::move(s), b, comp);
}

Complex cone(const ChainMap& f)
{
    const Complex& src = f.source();
    const Complex& tgt = f.target();
    auto [lo, hi] = union_range(shift(src, 1), tgt);
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = lo; n <= hi; ++n)
        dims[n] = src.dim(n + 1) + tgt.dim(n);
    for (int n = lo - 1; n <= hi; ++n) {
        Matrix m(src.dim(n + 2) + tgt.dim(n + 1), src.dim(n + 1) + tgt.dim(n));
        if (!src.d(n + 1).empty())
            m.set_block(0, 0, -src.d(n + 1));
        if (!f.at(n + 1).empty())
            m.set_block(src.dim(n + 2), 0, f.at(n + 1));
        if (!tgt.d(n).empty())
            m.set_block(src.dim(n + 2), src.dim(n + 1), tgt.d(n));
        d[n] = std::move(m);
    }
    return Complex::make(dims, d);
}

bool is_degreewise_injective(const ChainMap& f)
{
    for (int n = f.lo(); n <= f.hi(); ++n)
        if (!is_injective(f.at(n)))
            return false;
    return true;
}

bool is_degreewise_surjective(const ChainMap& f)
{
    for (int n = f.lo(); n <= f.hi(); ++n)
        if (!is_surjective(f.at(n)))
            return false;
    return true;
}

ChainMap subcomplex_inclusion(const Complex& c, const std::map<int, Matrix>& spanning)
{
    std::map<int, Matrix> basis;
    std::map<int, std::size_t> dims;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        auto it = spanning.find(n);
        Matrix b = it == spanning.end() ? Matrix(c.dim(n), 0) : image_basis(it->second);
        if (b.rows() != c.dim(n))
            throw ShapeMismatch("subcomplex: spanning set in " + deg(n) + " has the wrong length");
        dims[n] = b.cols();
        basis[n] = std::move(b);
    }
    auto basis_at = [&](int n) {
        auto it = basis.find(n);
        return it == basis.end() ? Matrix(c.dim(n), 0) : it->second;
    };
    std::map<int, Matrix> d;
    for (int n = c.lo(); n < c.hi(); ++n) {
        auto coords = solve_linear(basis_at(n + 1), c.d(n) * basis_at(n));
        if (!coords)
            throw NotAComplex("subcomplex: span is not closed under d in " + deg(n));
        d[n] = std::move(*coords);
    }
    Complex sub = Complex::make(dims, d);
    std::map<int, Matrix> comp;
    for (int n = sub.lo(); n <= sub.hi(); ++n)
        comp[n] = basis_at(n);
    return ChainMap::make(std::move(sub), c, comp);
}

ChainMap kernel_inclusion(const ChainMap& f)
{
    std::map<int, Matrix> spanning;
    const Complex& src = f.source();
    for (int n = src.lo(); n <= src.hi(); ++n)
        spanning[n] = f.at(n).empty() ? Matrix::identity(src.dim(n)) : kernel_basis(f.at(n));
    return subcomplex_inclusion(src, spanning);
}

ChainMap cokernel_projection(const ChainMap& f)
{
    const Complex& tgt = f.target();
    std::map<int, Matrix> proj;
    std::map<int, Matrix> section;
    std::map<int, std::size_t> dims;
    for (int n = tgt.lo(); n <= tgt.hi(); ++n) {
        const Matrix& fn = f.at(n);
        Matrix p = fn.empty() ? Matrix::identity(tgt.dim(n)) : kernel_basis(fn.transpose()).transpose();
        dims[n] = p.rows();
        section[n] = *solve_linear(p, Matrix::identity(p.rows()));
        proj[n] = std::move(p);
    }
    auto proj_at = [&](int n) {
        auto it = proj.find(n);
        return it == proj.end() ? Matrix(0, tgt.dim(n)) : it->second;
    };
    auto section_at = [&](int n) {
        auto it = section.find(n);
        return it == section.end() ? Matrix(tgt.dim(n), 0) : it->second;
    };
    std::map<int, Matrix> d;
    for (int n = tgt.lo(); n < tgt.hi(); ++n)
        d[n] = proj_at(n + 1) * tgt.d(n) * section_at(n);
    Complex q = Complex::make(dims, d);
    std::map<int, Matrix> comp;
    for (int n = q.lo(); n <= q.hi(); ++n)
        comp[n] = proj_at(n);
    return ChainMap::make(tgt, std::move(q), comp);
}

std::size_t CohomologyReport::dim(int n) const
{
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
}

namespace {

struct DegreeCohomology {
    Matrix boundaries;      ///< basis of B^n
    Matrix representatives; ///< completes boundaries to a basis of Z^n
};

DegreeCohomology degree_cohomology(const Complex& c, int n)
{
    const std::size_t dim = c.dim(n);
    Matrix z = c.d(n).empty() ? Matrix::identity(dim) : kernel_basis(c.d(n));
    Matrix b = c.d(n - 1).empty() ? Matrix(dim, 0) : image_basis(c.d(n - 1));
    const RrefResult rr = rref_rank(hstack(b, z));
    std::vector<std::size_t> extra;
    for (auto p : rr.pivots)
        if (p >= b.cols())
            extra.push_back(p - b.cols());
    Matrix reps(dim, extra.size());
    for (std::size_t k = 0; k < extra.size(); ++k)
        reps.set_block(0, k, z.column(extra[k]));
    return {std::move(b), std::move(reps)};
}

} // namespace

CohomologyReport cohomology(const Complex& c)
{
    CohomologyReport report;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        auto dc = degree_cohomology(c, n);
        report.dims[n] = dc.representatives.cols();
        report.representatives[n] = std::move(dc.representatives);
    }
    return report;
}

std::size_t cohomology_dim(const Complex& c, int n)
{
    const std::size_t dim = c.dim(n);
    if (dim == 0)
        return 0;
    return dim - rank(c.d(n)) - rank(c.d(n - 1));
}

bool is_acyclic(const Complex& c)
{
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (cohomology_dim(c, n) != 0)
            return false;
    return true;
}

Matrix cohomology_coordinates(const Complex& c, int n, const Matrix& cocycles)
{
    const auto dc = degree_cohomology(c, n);
    if (cocycles.rows() != c.dim(n))
        throw ShapeMismatch("cohomology_coordinates: vectors have the wrong length");
    if (!c.d(n).empty() && !(c.d(n) * cocycles).is_zero())
        throw ShapeMismatch("cohomology_coordinates: input columns are not cocycles in " + deg(n));
    auto x = solve_linear(hstack(dc.boundaries, dc.representatives), cocycles);
    return x->rows_range(dc.boundaries.cols(), dc.representatives.cols());
}

Matrix induced_on_cohomology(const ChainMap& f, int n)
{
    const auto src = degree_cohomology(f.source(), n);
    if (src.representatives.cols() == 0 || f.target().dim(n) == 0)
        return Matrix(cohomology_dim(f.target(), n), src.representatives.cols());
    return cohomology_coordinates(f.target(), n, f.at(n) * src.representatives);
}

bool is_quasi_iso(const ChainMap& f)
{
    for (int n = f.lo(); n <= f.hi(); ++n) {
        const Matrix h = induced_on_cohomology(f, n);
        if (h.rows() != h.cols() || rank(h) != h.rows())
            return false;
    }
    return true;
}

} // namespace fdg
