#include "fdg/graded.hpp"

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

} // namespace

GradedModuleComplex GradedModuleComplex::make(std::vector<Complex> components, std::vector<ChainMap> t_maps)
{
    if (components.empty())
        throw NotAGradedModule("graded module needs at least the weight-0 component");
    if (t_maps.size() + 1 != components.size())
        throw NotAGradedModule(std::to_string(components.size()) + " weights need " +
                               std::to_string(components.size() - 1) + " t-maps");
    for (std::size_t w = 1; w < components.size(); ++w)
        if (!(t_maps[w - 1].source() == components[w]) || !(t_maps[w - 1].target() == components[w - 1]))
            throw NotAGradedModule("t-map at weight " + std::to_string(w) + " does not lower the weight by one");
    GradedModuleComplex g;
    g.components_ = std::move(components);
    g.t_maps_ = std::move(t_maps);
    return g;
}

const Complex& GradedModuleComplex::component(int w) const
{
    if (components_.empty())
        return zero_complex();
    if (w < 0)
        return components_.front();
    if (static_cast<std::size_t>(w) >= components_.size())
        return zero_complex();
    return components_[static_cast<std::size_t>(w)];
}

ChainMap GradedModuleComplex::t_map(int w) const
{
    if (w <= 0)
        return ChainMap::identity(component(0));
    if (static_cast<std::size_t>(w) < components_.size())
        return t_maps_[static_cast<std::size_t>(w) - 1];
    return ChainMap::zero(component(w), component(w - 1));
}

namespace {

std::size_t band_size(const GradedModuleComplex& a, const GradedModuleComplex& b)
{
    return std::max(a.top_weight(), b.top_weight()) + 1;
}

} // namespace

GradedMap GradedMap::make(GradedModuleComplex source, GradedModuleComplex target, std::vector<ChainMap> weights)
{
    const std::size_t count = band_size(source, target);
    if (weights.size() != count)
        throw NotAChainMap("graded map needs " + std::to_string(count) + " weights, got " +
                           std::to_string(weights.size()));
    for (std::size_t w = 0; w < count; ++w) {
        const int iw = static_cast<int>(w);
        if (!(weights[w].source() == source.component(iw)) || !(weights[w].target() == target.component(iw)))
            throw NotAChainMap("graded map weight " + std::to_string(w) + " has the wrong source or target");
    }
    for (std::size_t w = 1; w < count; ++w) {
        const int iw = static_cast<int>(w);
        if (!(compose(target.t_map(iw), weights[w]) == compose(weights[w - 1], source.t_map(iw))))
            throw NotAChainMap("graded map does not commute with t at weight " + std::to_string(w));
    }
    GradedMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.weights_ = std::move(weights);
    return f;
}

GradedModuleComplex rees(const FilteredComplex& m)
{
    if (m.length() == 0)
        return GradedModuleComplex::make({Complex{}}, {});
    std::vector<Complex> components;
    std::vector<ChainMap> t_maps;
    for (std::size_t w = 0; w < m.length(); ++w)
        components.push_back(m.level(w));
    for (std::size_t w = 1; w < m.length(); ++w)
        t_maps.push_back(m.inclusion(w - 1));
    return GradedModuleComplex::make(std::move(components), std::move(t_maps));
}

GradedMap rees(const FilteredMap& f)
{
    GradedModuleComplex source = rees(f.source());
    GradedModuleComplex target = rees(f.target());
    std::vector<ChainMap> weights;
    for (std::size_t w = 0; w < band_size(source, target); ++w)
        weights.push_back(f.level(w));
    return GradedMap::make(std::move(source), std::move(target), std::move(weights));
}

namespace {

/// The composites c_w : component(w) -> component(0) and the inclusions of their images.
struct ImagePresentation {
    std::vector<ChainMap> composite;
    std::vector<ChainMap> image;
};

ImagePresentation image_presentation(const GradedModuleComplex& g)
{
    ImagePresentation out;
    const Complex& base = g.component(0);
    for (std::size_t w = 0; w <= g.top_weight(); ++w) {
        const int iw = static_cast<int>(w);
        out.composite.push_back(w == 0 ? ChainMap::identity(base) : compose(out.composite.back(), g.t_map(iw)));
        // Injective composites already present their image; keeping them makes phi(rees(x)) == x literally.
        if (is_degreewise_injective(out.composite.back())) {
            out.image.push_back(out.composite.back());
            continue;
        }
        std::map<int, Matrix> spanning;
        for (int n = base.lo(); n <= base.hi(); ++n)
            spanning[n] = detail::component_or_zero(out.composite.back(), n);
        out.image.push_back(subcomplex_inclusion(base, spanning));
    }
    return out;
}

/// The unique x with incl x = f, degreewise; incl must be injective and contain the image of f.
ChainMap corestrict(const ChainMap& incl, const ChainMap& f)
{
    const Complex& src = f.source();
    const Complex& sub = incl.source();
    std::map<int, Matrix> comp;
    for (int n = src.lo(); n <= src.hi(); ++n) {
        if (sub.dim(n) == 0)
            continue;
        auto x = solve_linear(detail::component_or_zero(incl, n), detail::component_or_zero(f, n));
        if (!x)
            throw ShapeMismatch("corestriction: map leaves the subcomplex");
        comp[n] = std::move(*x);
    }
    return ChainMap::make(src, sub, comp);
}

} // namespace

FilteredComplex phi(const GradedModuleComplex& g)
{
    const ImagePresentation pres = image_presentation(g);
    std::vector<Complex> levels;
    std::vector<ChainMap> inclusions;
    for (const auto& incl : pres.image)
        levels.push_back(incl.source());
    levels.emplace_back();
    for (std::size_t w = 0; w + 1 < pres.image.size(); ++w)
        inclusions.push_back(corestrict(pres.image[w], pres.image[w + 1]));
    inclusions.push_back(ChainMap::zero({}, levels[pres.image.size() - 1]));
    return FilteredComplex::make(std::move(levels), std::move(inclusions));
}

bool is_torsion_free(const GradedModuleComplex& g)
{
    return std::all_of(g.stored_t_maps().begin(), g.stored_t_maps().end(),
                       [](const ChainMap& t) { return is_degreewise_injective(t); });
}

GradedMap unit_comparison(const GradedModuleComplex& g)
{
    const ImagePresentation pres = image_presentation(g);
    GradedModuleComplex target = rees(phi(g));
    std::vector<ChainMap> weights;
    for (std::size_t w = 0; w < pres.image.size(); ++w)
        weights.push_back(corestrict(pres.image[w], pres.composite[w]));
    return GradedMap::make(g, std::move(target), std::move(weights));
}

bool is_graded_isomorphism(const GradedMap& f)
{
    return std::all_of(f.weights().begin(), f.weights().end(), [](const ChainMap& c) {
        return is_degreewise_injective(c) && is_degreewise_surjective(c);
    });
}

namespace {

std::pair<int, int> module_span(const GradedModuleComplex& g, const GradedModuleComplex& h)
{
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto* m : {&g, &h})
        for (const auto& c : m->components()) {
            if (c.is_zero())
                continue;
            lo = any ? std::min(lo, c.lo()) : c.lo();
            hi = any ? std::max(hi, c.hi()) : c.hi();
            any = true;
        }
    return {lo, hi};
}

} // namespace

std::vector<GradedMap> graded_hom_weight0(const GradedModuleComplex& g, const GradedModuleComplex& h)
{
    using detail::DegreewiseUnknown;
    const std::size_t count = band_size(g, h);
    const auto [lo, hi] = module_span(g, h);
    MatrixSystem sys;
    // f[0] is the tail weight -1, f[w + 1] is weight w.
    std::vector<std::unique_ptr<DegreewiseUnknown>> f;
    for (int w = -1; w < static_cast<int>(count); ++w) {
        f.push_back(std::make_unique<DegreewiseUnknown>(sys, g.component(w), h.component(w), lo, hi));
        detail::add_chain_conditions(sys, *f.back(), lo, hi);
    }
    std::vector<ChainMap> tg, th;
    for (int w = 0; w < static_cast<int>(count); ++w) {
        tg.push_back(g.t_map(w));
        th.push_back(h.t_map(w));
    }
    for (int w = 0; w < static_cast<int>(count); ++w) {
        const auto uw = static_cast<std::size_t>(w);
        detail::add_compatibility(sys, *f[uw + 1], *f[uw], th[uw], tg[uw], lo, hi);
    }
    const Matrix basis = sys.nullspace();
    std::vector<GradedMap> out;
    for (std::size_t k = 0; k < basis.cols(); ++k) {
        const auto blocks = sys.unpack(basis.column(k));
        std::vector<ChainMap> weights;
        for (std::size_t w = 0; w < count; ++w) {
            const int iw = static_cast<int>(w);
            weights.push_back(ChainMap::make(g.component(iw), h.component(iw), f[w + 1]->extract(blocks)));
        }
        out.push_back(GradedMap::make(g, h, std::move(weights)));
    }
    return out;
}

bool graded_is_fibration(const GradedMap& f)
{
    return std::all_of(f.weights().begin(), f.weights().end(),
                       [](const ChainMap& c) { return is_degreewise_surjective(c); });
}

bool graded_is_weak_equivalence(const GradedMap& f)
{
    return std::all_of(f.weights().begin(), f.weights().end(), [](const ChainMap& c) { return is_quasi_iso(c); });
}

bool rees_fibration_audit(const FilteredMap& p)
{
    return !is_filtered_fibration(p) || graded_is_fibration(rees(p));
}

namespace {

/// Degree-k families f_{w,a} : g_w^a -> h_w^{a+k} for w = -1..count-1, commuting with t.
struct GradedHomDegree {
    std::vector<std::size_t> offset; // per weight slot (index w + 1), plus the total
    Matrix basis;
};

GradedHomDegree graded_hom_degree(const GradedModuleComplex& g, const GradedModuleComplex& h, std::size_t count,
                                  int k)
{
    GradedHomDegree out;
    MatrixSystem sys;
    std::vector<std::map<int, MatrixSystem::Block>> blocks(count + 1);
    out.offset.push_back(0);
    for (int w = -1; w < static_cast<int>(count); ++w) {
        for (const auto& s : hom_slots(g.component(w), h.component(w), k))
            blocks[static_cast<std::size_t>(w + 1)][s.source_degree] = sys.add_unknown(s.rows, s.cols);
        out.offset.push_back(out.offset.back() + hom_dim(g.component(w), h.component(w), k));
    }
    // t^h_w f_w = f_{w-1} t^g_w
    for (int w = 0; w < static_cast<int>(count); ++w) {
        const ChainMap tg = g.t_map(w);
        const ChainMap th = h.t_map(w);
        const Complex& gw = g.component(w);
        const auto& upper = blocks[static_cast<std::size_t>(w + 1)];
        const auto& lower = blocks[static_cast<std::size_t>(w)];
        for (int a = gw.lo(); a <= gw.hi(); ++a) {
            const std::size_t rows = h.component(w - 1).dim(a + k);
            const std::size_t cols = gw.dim(a);
            if (rows == 0 || cols == 0)
                continue;
            std::vector<MatrixSystem::Term> terms;
            if (auto it = upper.find(a); it != upper.end())
                terms.push_back({it->second, th.at(a + k), Matrix::identity(cols)});
            if (auto it = lower.find(a); it != lower.end())
                terms.push_back({it->second, -Matrix::identity(rows), tg.at(a)});
            sys.add_equation(terms);
        }
    }
    out.basis = sys.nullspace();
    return out;
}

} // namespace

Complex graded_hom_complex(const GradedModuleComplex& g, const GradedModuleComplex& h)
{
    const auto [glo, ghi] = module_span(g, g);
    const auto [hlo, hhi] = module_span(h, h);
    if (glo > ghi || hlo > hhi)
        return {};
    const std::size_t count = band_size(g, h);
    const int lo = hlo - ghi;
    const int hi = hhi - glo;
    std::map<int, GradedHomDegree> degrees;
    std::map<int, std::size_t> dims;
    for (int k = lo; k <= hi; ++k) {
        degrees[k] = graded_hom_degree(g, h, count, k);
        dims[k] = degrees[k].basis.cols();
    }
    std::map<int, Matrix> d;
    for (int k = lo; k < hi; ++k) {
        if (dims[k] == 0 || dims[k + 1] == 0)
            continue;
        const GradedHomDegree& src = degrees[k];
        const GradedHomDegree& tgt = degrees[k + 1];
        Matrix images(tgt.offset.back(), dims[k]);
        for (std::size_t j = 0; j < dims[k]; ++j) {
            const Matrix column = src.basis.column(j);
            for (int w = -1; w < static_cast<int>(count); ++w) {
                const auto slot = static_cast<std::size_t>(w + 1);
                const Complex& gw = g.component(w);
                const Complex& hw = h.component(w);
                const auto family = unpack_graded_map(
                    gw, hw, k, column.rows_range(src.offset[slot], src.offset[slot + 1] - src.offset[slot]));
                images.set_block(tgt.offset[slot], j,
                                 pack_graded_map(gw, hw, k + 1, hom_differential(gw, hw, k, family)));
            }
        }
        auto coords = solve_linear(tgt.basis, images);
        if (!coords)
            throw NotAComplex("graded HOM differential leaves the t-commuting families");
        d[k] = std::move(*coords);
    }
    return Complex::make(dims, d);
}

std::size_t graded_ext_weight0_dim(const GradedModuleComplex& g, const GradedModuleComplex& h, int i)
{
    return cohomology_dim(graded_hom_complex(g, h), i);
}

} // namespace fdg
