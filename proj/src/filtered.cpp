#include "fdg/filtered.hpp"

#include "fdg/errors.hpp"
#include "fdg/hom.hpp"
#include "fdg/linear_system.hpp"
#include "fdg/model.hpp"
#include "system_util.hpp"

#include <algorithm>
#include <memory>

namespace fdg {

namespace {

const Complex& zero_complex()
{
    static const Complex z;
    return z;
}

const ChainMap& zero_map()
{
    static const ChainMap z = ChainMap::zero({}, {});
    return z;
}

} // namespace

FilteredComplex FilteredComplex::make(std::vector<Complex> levels, std::vector<ChainMap> inclusions)
{
    if (levels.size() < 2)
        throw NotAFiltration("filtration needs at least F^0 and F^1");
    if (inclusions.size() + 1 != levels.size())
        throw NotAFiltration("filtration with " + std::to_string(levels.size()) + " levels needs " +
                             std::to_string(levels.size() - 1) + " inclusions");
    if (!levels.back().is_zero())
        throw NotAFiltration("last filtration level is not zero");
    for (std::size_t k = 0; k < inclusions.size(); ++k) {
        if (!(inclusions[k].source() == levels[k + 1]) || !(inclusions[k].target() == levels[k]))
            throw NotAFiltration("inclusion " + std::to_string(k) + " does not map F^" + std::to_string(k + 1) +
                                 " into F^" + std::to_string(k));
        if (!is_degreewise_injective(inclusions[k]))
            throw NotAFiltration("inclusion " + std::to_string(k) + " is not injective");
    }
    FilteredComplex m;
    m.levels_ = std::move(levels);
    m.inclusions_ = std::move(inclusions);
    return m;
}

FilteredComplex FilteredComplex::trivial(const Complex& c)
{
    return make({c, Complex{}}, {ChainMap::zero({}, c)});
}

const Complex& FilteredComplex::level(std::size_t k) const
{
    return k < levels_.size() ? levels_[k] : zero_complex();
}

const ChainMap& FilteredComplex::inclusion(std::size_t k) const
{
    return k < inclusions_.size() ? inclusions_[k] : zero_map();
}

FilteredComplex FilteredComplex::padded(std::size_t length) const
{
    FilteredComplex out = *this;
    if (levels_.empty())
        out = trivial({});
    while (out.inclusions_.size() < length) {
        out.levels_.emplace_back();
        out.inclusions_.push_back(zero_map());
    }
    return out;
}

FilteredComplex filtered_generator(GeneratorKind kind, int n, std::size_t p, std::size_t length)
{
    if (length <= p)
        throw NotAFiltration("generator level " + std::to_string(p) + " needs length > " + std::to_string(p));
    const Complex c = generator(kind, n);
    std::vector<Complex> levels;
    std::vector<ChainMap> inclusions;
    for (std::size_t k = 0; k <= length; ++k)
        levels.push_back(k <= p ? c : Complex{});
    for (std::size_t k = 0; k < length; ++k)
        inclusions.push_back(k < p ? ChainMap::identity(c) : ChainMap::zero({}, levels[k]));
    return FilteredComplex::make(std::move(levels), std::move(inclusions));
}

FilteredComplex shift(const FilteredComplex& m, int k)
{
    std::vector<Complex> levels;
    std::vector<ChainMap> inclusions;
    for (std::size_t l = 0; l <= m.length(); ++l)
        levels.push_back(shift(m.level(l), k));
    for (std::size_t l = 0; l < m.length(); ++l)
        inclusions.push_back(shift(m.inclusion(l), k));
    return FilteredComplex::make(std::move(levels), std::move(inclusions));
}

ChainMap inclusion_into_ambient(const FilteredComplex& m, std::size_t k)
{
    ChainMap out = ChainMap::identity(m.level(k));
    for (std::size_t j = k; j > 0; --j)
        out = compose(m.inclusion(j - 1), out);
    return out;
}

FilteredMap FilteredMap::make(FilteredComplex source, FilteredComplex target, std::vector<ChainMap> levels)
{
    const std::size_t count = std::max(source.length(), target.length());
    if (levels.size() != count)
        throw NotAChainMap("filtered map needs " + std::to_string(count) + " levels, got " +
                           std::to_string(levels.size()));
    for (std::size_t k = 0; k < count; ++k)
        if (!(levels[k].source() == source.level(k)) || !(levels[k].target() == target.level(k)))
            throw NotAChainMap("filtered map level " + std::to_string(k) + " does not map F^" + std::to_string(k) +
                               " to F^" + std::to_string(k));
    FilteredMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.levels_ = std::move(levels);
    for (std::size_t k = 0; k < count; ++k)
        if (!(compose(f.target_.inclusion(k), f.level(k + 1)) == compose(f.level(k), f.source_.inclusion(k))))
            throw NotAChainMap("filtered map does not commute with inclusion " + std::to_string(k));
    return f;
}

FilteredMap FilteredMap::identity(const FilteredComplex& m)
{
    std::vector<ChainMap> levels;
    for (std::size_t k = 0; k < m.length(); ++k)
        levels.push_back(ChainMap::identity(m.level(k)));
    return make(m, m, std::move(levels));
}

FilteredMap FilteredMap::zero(FilteredComplex source, FilteredComplex target)
{
    std::vector<ChainMap> levels;
    for (std::size_t k = 0; k < std::max(source.length(), target.length()); ++k)
        levels.push_back(ChainMap::zero(source.level(k), target.level(k)));
    return make(std::move(source), std::move(target), std::move(levels));
}

const ChainMap& FilteredMap::level(std::size_t k) const
{
    return k < levels_.size() ? levels_[k] : zero_map();
}

FilteredMap compose(const FilteredMap& g, const FilteredMap& f)
{
    if (!(f.target() == g.source()))
        throw ShapeMismatch("compose: target of f is not the source of g");
    std::vector<ChainMap> levels;
    for (std::size_t k = 0; k < std::max(f.source().length(), g.target().length()); ++k) {
        if (f.source().level(k).is_zero() || g.target().level(k).is_zero())
            levels.push_back(ChainMap::zero(f.source().level(k), g.target().level(k)));
        else
            levels.push_back(compose(g.level(k), f.level(k)));
    }
    return FilteredMap::make(f.source(), g.target(), std::move(levels));
}

FilteredComplex direct_sum(const FilteredComplex& a, const FilteredComplex& b)
{
    const std::size_t length = std::max(a.length(), b.length());
    std::vector<Complex> levels;
    std::vector<ChainMap> inclusions;
    for (std::size_t k = 0; k <= length; ++k)
        levels.push_back(direct_sum(a.level(k), b.level(k)));
    for (std::size_t k = 0; k < length; ++k) {
        const ChainMap ia = k < a.length() ? a.inclusion(k) : ChainMap::zero({}, a.level(k));
        const ChainMap ib = k < b.length() ? b.inclusion(k) : ChainMap::zero({}, b.level(k));
        inclusions.push_back(direct_sum(ia, ib));
    }
    return FilteredComplex::make(std::move(levels), std::move(inclusions));
}

FilteredMap direct_sum(const FilteredMap& a, const FilteredMap& b)
{
    const FilteredComplex source = direct_sum(a.source(), b.source());
    const FilteredComplex target = direct_sum(a.target(), b.target());
    std::vector<ChainMap> levels;
    for (std::size_t k = 0; k < std::max(source.length(), target.length()); ++k) {
        const ChainMap fa = k < a.level_count() ? a.level(k) : ChainMap::zero(a.source().level(k), a.target().level(k));
        const ChainMap fb = k < b.level_count() ? b.level(k) : ChainMap::zero(b.source().level(k), b.target().level(k));
        levels.push_back(direct_sum(fa, fb));
    }
    return FilteredMap::make(source, target, std::move(levels));
}

bool is_filtered_weak_equivalence(const FilteredMap& f)
{
    for (std::size_t k = 0; k < f.level_count(); ++k)
        if (!is_quasi_iso(f.level(k)))
            return false;
    return true;
}

bool is_filtered_fibration(const FilteredMap& f)
{
    for (std::size_t k = 0; k < f.level_count(); ++k)
        if (!is_fibration(f.level(k)))
            return false;
    return true;
}

bool is_filtered_trivial_fibration(const FilteredMap& f)
{
    for (std::size_t k = 0; k < f.level_count(); ++k)
        if (!is_trivial_fibration(f.level(k)))
            return false;
    return true;
}

bool check_cofibrant_hypotheses(const FilteredComplex& m)
{
    if (m.length() == 0 || !m.level(m.length()).is_zero())
        return false;
    for (std::size_t k = 0; k < m.length(); ++k)
        if (!is_degreewise_injective(m.inclusion(k)))
            return false;
    return true;
}

namespace {

/// Degree-k families on every level, constrained to commute with the inclusions.  The flat layout
/// concatenates the per-level layouts of pack_graded_map.
struct FilteredHomDegree {
    std::size_t levels = 0;
    std::vector<std::size_t> offset; // per level, plus total at the end
    Matrix basis;                    // columns span the compatible families
};

FilteredHomDegree filtered_hom_degree(const FilteredComplex& m, const FilteredComplex& n, std::size_t count, int k)
{
    FilteredHomDegree out;
    out.levels = count;
    MatrixSystem sys;
    // blocks[l][a]
    std::vector<std::map<int, MatrixSystem::Block>> blocks(count);
    out.offset.push_back(0);
    for (std::size_t l = 0; l < count; ++l) {
        for (const auto& s : hom_slots(m.level(l), n.level(l), k))
            blocks[l][s.source_degree] = sys.add_unknown(s.rows, s.cols);
        out.offset.push_back(out.offset.back() + hom_dim(m.level(l), n.level(l), k));
    }
    // inclusion^N_l f_{l+1} = f_l inclusion^M_l
    for (std::size_t l = 0; l + 1 < count; ++l) {
        const Complex& m1 = m.level(l + 1);
        for (int a = m1.lo(); a <= m1.hi(); ++a) {
            const std::size_t rows = n.level(l).dim(a + k);
            const std::size_t cols = m1.dim(a);
            if (rows == 0 || cols == 0)
                continue;
            std::vector<MatrixSystem::Term> terms;
            if (auto it = blocks[l + 1].find(a); it != blocks[l + 1].end())
                terms.push_back({it->second, n.inclusion(l).at(a + k), Matrix::identity(cols)});
            if (auto it = blocks[l].find(a); it != blocks[l].end())
                terms.push_back({it->second, -Matrix::identity(rows), m.inclusion(l).at(a)});
            sys.add_equation(terms);
        }
    }
    out.basis = sys.nullspace();
    return out;
}

std::vector<std::map<int, Matrix>> split_levels(const FilteredComplex& m, const FilteredComplex& n,
                                                const FilteredHomDegree& deg, int k, const Matrix& flat)
{
    std::vector<std::map<int, Matrix>> out;
    for (std::size_t l = 0; l < deg.levels; ++l)
        out.push_back(unpack_graded_map(m.level(l), n.level(l), k,
                                        flat.rows_range(deg.offset[l], deg.offset[l + 1] - deg.offset[l])));
    return out;
}

Matrix join_levels(const FilteredComplex& m, const FilteredComplex& n, const FilteredHomDegree& deg, int k,
                   const std::vector<std::map<int, Matrix>>& families)
{
    Matrix flat(deg.offset.back(), 1);
    for (std::size_t l = 0; l < deg.levels; ++l)
        flat.set_block(deg.offset[l], 0, pack_graded_map(m.level(l), n.level(l), k, families[l]));
    return flat;
}

} // namespace

Complex filtered_hom_complex(const FilteredComplex& m, const FilteredComplex& n)
{
    const Complex& am = m.ambient();
    const Complex& an = n.ambient();
    if (am.is_zero() || an.is_zero())
        return {};
    const std::size_t count = std::max(m.length(), n.length());
    const int lo = an.lo() - am.hi();
    const int hi = an.hi() - am.lo();
    std::map<int, FilteredHomDegree> degrees;
    std::map<int, std::size_t> dims;
    for (int k = lo; k <= hi; ++k) {
        degrees[k] = filtered_hom_degree(m, n, count, k);
        dims[k] = degrees[k].basis.cols();
    }
    std::map<int, Matrix> d;
    for (int k = lo; k < hi; ++k) {
        const FilteredHomDegree& src = degrees[k];
        const FilteredHomDegree& tgt = degrees[k + 1];
        if (dims[k] == 0 || dims[k + 1] == 0)
            continue;
        Matrix images(tgt.offset.back(), dims[k]);
        for (std::size_t j = 0; j < dims[k]; ++j) {
            auto families = split_levels(m, n, src, k, src.basis.column(j));
            for (std::size_t l = 0; l < count; ++l)
                families[l] = hom_differential(m.level(l), n.level(l), k, families[l]);
            images.set_block(0, j, join_levels(m, n, tgt, k + 1, families));
        }
        auto coords = solve_linear(tgt.basis, images);
        if (!coords)
            throw NotAComplex("filtered HOM differential leaves the compatible families");
        d[k] = std::move(*coords);
    }
    return Complex::make(dims, d);
}

std::size_t filtered_ext_dim(const FilteredComplex& m, const FilteredComplex& n, int i)
{
    return cohomology_dim(filtered_hom_complex(m, n), i);
}

namespace {

using detail::add_chain_conditions;
using detail::add_compatibility;
using detail::component_or_zero;
using detail::DegreewiseUnknown;
using detail::span_of;

void check_filtered_square(const FilteredMap& i, const FilteredMap& p, const FilteredSquare& s)
{
    if (!(s.f.source() == i.source()) || !(s.f.target() == p.source()) || !(s.g.source() == i.target()) ||
        !(s.g.target() == p.target()))
        throw ShapeMismatch("filtered lifting square: maps do not fit together");
    if (!(compose(s.g, i) == compose(p, s.f)))
        throw NonCommutingSquare("filtered lifting square: g i != p f");
}

std::size_t square_levels(const FilteredMap& i, const FilteredMap& p)
{
    return std::max({i.source().length(), i.target().length(), p.source().length(), p.target().length()});
}

std::pair<int, int> ambient_span(const FilteredMap& i, const FilteredMap& p)
{
    return span_of({&i.source().ambient(), &i.target().ambient(), &p.source().ambient(), &p.target().ambient()});
}

/// Levelwise degree-0 unknowns source.level(l) -> target.level(l), chain conditions and the
/// compatibility with the inclusions.
std::vector<std::unique_ptr<DegreewiseUnknown>> filtered_unknown(MatrixSystem& sys, const FilteredComplex& source,
                                                                 const FilteredComplex& target, std::size_t count,
                                                                 int lo, int hi)
{
    std::vector<std::unique_ptr<DegreewiseUnknown>> h;
    for (std::size_t l = 0; l < count; ++l) {
        h.push_back(std::make_unique<DegreewiseUnknown>(sys, source.level(l), target.level(l), lo, hi));
        add_chain_conditions(sys, *h.back(), lo, hi);
    }
    for (std::size_t l = 0; l + 1 < count; ++l)
        add_compatibility(sys, *h[l + 1], *h[l], target.inclusion(l), source.inclusion(l), lo, hi);
    return h;
}

FilteredMap extract_filtered(const FilteredComplex& source, const FilteredComplex& target,
                             const std::vector<std::unique_ptr<DegreewiseUnknown>>& h,
                             const std::vector<Matrix>& solution)
{
    std::vector<ChainMap> levels;
    for (std::size_t l = 0; l < std::max(source.length(), target.length()); ++l)
        levels.push_back(ChainMap::make(source.level(l), target.level(l), h[l]->extract(solution)));
    return FilteredMap::make(source, target, std::move(levels));
}

} // namespace

std::vector<FilteredMap> filtered_maps_basis(const FilteredComplex& m, const FilteredComplex& n)
{
    const std::size_t count = std::max(m.length(), n.length());
    const auto [lo, hi] = span_of({&m.ambient(), &n.ambient()});
    MatrixSystem sys;
    const auto f = filtered_unknown(sys, m, n, count, lo, hi);
    const Matrix basis = sys.nullspace();
    std::vector<FilteredMap> out;
    for (std::size_t k = 0; k < basis.cols(); ++k)
        out.push_back(extract_filtered(m, n, f, sys.unpack(basis.column(k))));
    return out;
}

FilteredMap operator+(const FilteredMap& a, const FilteredMap& b)
{
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
        throw ShapeMismatch("filtered map sum: differing source or target");
    std::vector<ChainMap> levels;
    for (std::size_t k = 0; k < a.level_count(); ++k)
        levels.push_back(a.level(k) + b.level(k));
    return FilteredMap::make(a.source(), a.target(), std::move(levels));
}

FilteredMap operator*(const Rational& s, const FilteredMap& f)
{
    std::vector<ChainMap> levels;
    for (std::size_t k = 0; k < f.level_count(); ++k)
        levels.push_back(s * f.level(k));
    return FilteredMap::make(f.source(), f.target(), std::move(levels));
}

std::vector<std::optional<FilteredMap>> filtered_lift_squares(const FilteredMap& i, const FilteredMap& p,
                                                              const std::vector<FilteredSquare>& squares)
{
    for (const auto& s : squares)
        check_filtered_square(i, p, s);
    if (squares.empty())
        return {};
    const FilteredComplex& n = i.target();
    const FilteredComplex& x = p.source();
    const std::size_t count = square_levels(i, p);
    const auto [lo, hi] = ambient_span(i, p);

    MatrixSystem sys(squares.size());
    const auto h = filtered_unknown(sys, n, x, count, lo, hi);
    for (std::size_t l = 0; l < count; ++l) {
        const Complex& ml = i.source().level(l);
        const Complex& nl = n.level(l);
        const Complex& xl = x.level(l);
        const Complex& yl = p.target().level(l);
        for (int a = lo; a <= hi; ++a) {
            auto b = h[l]->at(a);
            // h i = f
            if (ml.dim(a) > 0 && xl.dim(a) > 0) {
                std::vector<Matrix> rhs;
                for (const auto& s : squares)
                    rhs.push_back(component_or_zero(s.f.level(l), a));
                if (b)
                    sys.add_equation({{*b, Matrix::identity(xl.dim(a)), i.level(l).at(a)}}, rhs);
                else
                    sys.add_equation({}, rhs);
            }
            // p h = g
            if (yl.dim(a) > 0 && nl.dim(a) > 0) {
                std::vector<Matrix> rhs;
                for (const auto& s : squares)
                    rhs.push_back(component_or_zero(s.g.level(l), a));
                if (b)
                    sys.add_equation({{*b, p.level(l).at(a), Matrix::identity(nl.dim(a))}}, rhs);
                else
                    sys.add_equation({}, rhs);
            }
        }
    }
    std::vector<std::optional<FilteredMap>> out;
    for (std::size_t k = 0; k < squares.size(); ++k) {
        auto sol = sys.solve(k);
        if (!sol)
            out.emplace_back(std::nullopt);
        else
            out.emplace_back(extract_filtered(n, x, h, *sol));
    }
    return out;
}

std::optional<FilteredMap> filtered_lift_square(const FilteredMap& i, const FilteredMap& p, const FilteredMap& f,
                                                const FilteredMap& g)
{
    return filtered_lift_squares(i, p, {FilteredSquare{f, g}}).front();
}

std::vector<FilteredSquare> filtered_commuting_squares_basis(const FilteredMap& i, const FilteredMap& p)
{
    const FilteredComplex& m = i.source();
    const FilteredComplex& n = i.target();
    const FilteredComplex& x = p.source();
    const FilteredComplex& y = p.target();
    const std::size_t count = square_levels(i, p);
    const auto [lo, hi] = ambient_span(i, p);

    MatrixSystem sys;
    const auto f = filtered_unknown(sys, m, x, count, lo, hi);
    const auto g = filtered_unknown(sys, n, y, count, lo, hi);
    for (std::size_t l = 0; l < count; ++l) {
        const Complex& ml = m.level(l);
        const Complex& yl = y.level(l);
        for (int a = lo; a <= hi; ++a) {
            if (yl.dim(a) == 0 || ml.dim(a) == 0)
                continue;
            std::vector<MatrixSystem::Term> terms;
            if (auto b = g[l]->at(a))
                terms.push_back({*b, Matrix::identity(yl.dim(a)), i.level(l).at(a)});
            if (auto b = f[l]->at(a))
                terms.push_back({*b, -p.level(l).at(a), Matrix::identity(ml.dim(a))});
            sys.add_equation(terms);
        }
    }
    const Matrix basis = sys.nullspace();
    std::vector<FilteredSquare> squares;
    for (std::size_t k = 0; k < basis.cols(); ++k) {
        const auto blocks = sys.unpack(basis.column(k));
        squares.push_back({extract_filtered(m, x, f, blocks), extract_filtered(n, y, g, blocks)});
    }
    return squares;
}

FilteredMap filtered_disk_generator(int n, std::size_t p, std::size_t length)
{
    const FilteredComplex target = filtered_generator(GeneratorKind::disk, n, p, length);
    return FilteredMap::zero(FilteredComplex::trivial({}).padded(length), target);
}

FilteredMap filtered_boundary_generator(int n, std::size_t p, std::size_t length)
{
    const FilteredComplex source = filtered_generator(GeneratorKind::sphere, n + 1, p, length);
    const FilteredComplex target = filtered_generator(GeneratorKind::disk, n, p, length);
    std::vector<ChainMap> levels;
    for (std::size_t k = 0; k < length; ++k)
        levels.push_back(k <= p ? boundary_generator(n) : ChainMap::zero({}, {}));
    return FilteredMap::make(source, target, std::move(levels));
}

namespace {

bool filtered_lifts_against(const FilteredMap& generator, const FilteredMap& p)
{
    const auto squares = filtered_commuting_squares_basis(generator, p);
    const auto lifts = filtered_lift_squares(generator, p, squares);
    return std::all_of(lifts.begin(), lifts.end(), [](const auto& h) { return h.has_value(); });
}

template <typename Make>
bool filtered_lifts_against_all(const FilteredMap& p, Make make)
{
    const auto [lo, hi] = generator_range(p.source().ambient(), p.target().ambient());
    const std::size_t length = std::max({p.source().length(), p.target().length(), std::size_t{1}});
    for (int n = lo; n <= hi; ++n)
        for (std::size_t q = 0; q < length; ++q)
            if (!filtered_lifts_against(make(n, q, length), p))
                return false;
    return true;
}

} // namespace

bool filtered_lifts_against_disk_generators(const FilteredMap& p)
{
    return filtered_lifts_against_all(p, filtered_disk_generator);
}

bool filtered_lifts_against_boundary_generators(const FilteredMap& p)
{
    return filtered_lifts_against_all(p, filtered_boundary_generator);
}

} // namespace fdg
