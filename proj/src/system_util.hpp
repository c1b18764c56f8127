#pragma once

// Helpers shared by the solvers that assemble MatrixSystems over degreewise families.

#include "fdg/complex.hpp"
#include "fdg/linear_system.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fdg::detail {

inline std::pair<int, int> span_of(std::initializer_list<const Complex*> complexes)
{
    int lo = 0, hi = -1;
    bool any = false;
    for (const Complex* c : complexes) {
        if (c->is_zero())
            continue;
        if (!any) {
            lo = c->lo();
            hi = c->hi();
            any = true;
        }
        lo = std::min(lo, c->lo());
        hi = std::max(hi, c->hi());
    }
    return {lo, hi};
}

/// One matrix unknown per degree for a degree-0 family source -> target.
struct DegreewiseUnknown {
    const Complex* source;
    const Complex* target;
    std::map<int, MatrixSystem::Block> blocks;

    DegreewiseUnknown(MatrixSystem& sys, const Complex& src, const Complex& tgt, int lo, int hi)
        : source(&src), target(&tgt)
    {
        for (int a = lo; a <= hi; ++a)
            if (src.dim(a) > 0 && tgt.dim(a) > 0)
                blocks[a] = sys.add_unknown(tgt.dim(a), src.dim(a));
    }

    std::optional<MatrixSystem::Block> at(int a) const
    {
        auto it = blocks.find(a);
        if (it == blocks.end())
            return std::nullopt;
        return it->second;
    }

    std::map<int, Matrix> extract(const std::vector<Matrix>& solution) const
    {
        std::map<int, Matrix> out;
        for (const auto& [a, b] : blocks)
            out[a] = solution[b];
        return out;
    }
};

/// d_target h^a - h^{a+1} d_source = 0 for every a.
inline void add_chain_conditions(MatrixSystem& sys, const DegreewiseUnknown& h, int lo, int hi)
{
    const Complex& source = *h.source;
    const Complex& target = *h.target;
    for (int a = lo - 1; a <= hi; ++a) {
        const std::size_t rows = target.dim(a + 1);
        const std::size_t cols = source.dim(a);
        if (rows == 0 || cols == 0)
            continue;
        std::vector<MatrixSystem::Term> terms;
        if (auto b = h.at(a))
            terms.push_back({*b, target.d(a), Matrix::identity(cols)});
        if (auto b = h.at(a + 1))
            terms.push_back({*b, -Matrix::identity(rows), source.d(a)});
        sys.add_equation(terms);
    }
}

/// left_map o h^{upper-level} - h^{lower-level} o right_map = 0 per degree, used for the
/// compatibility of levelwise unknowns with inclusions or t-maps:  outer h_inner = h_outer inner.
inline void add_compatibility(MatrixSystem& sys, const DegreewiseUnknown& h_inner, const DegreewiseUnknown& h_outer,
                              const ChainMap& target_map, const ChainMap& source_map, int lo, int hi)
{
    // target_map : target_inner -> target_outer, source_map : source_inner -> source_outer
    for (int a = lo; a <= hi; ++a) {
        const std::size_t rows = h_outer.target->dim(a);
        const std::size_t cols = h_inner.source->dim(a);
        if (rows == 0 || cols == 0)
            continue;
        std::vector<MatrixSystem::Term> terms;
        if (auto b = h_inner.at(a))
            terms.push_back({*b, target_map.at(a), Matrix::identity(cols)});
        if (auto b = h_outer.at(a))
            terms.push_back({*b, -Matrix::identity(rows), source_map.at(a)});
        sys.add_equation(terms);
    }
}

inline Matrix component_or_zero(const ChainMap& f, int a)
{
    const Matrix& m = f.at(a);
    if (m.rows() == f.target().dim(a) && m.cols() == f.source().dim(a))
        return m;
    return Matrix(f.target().dim(a), f.source().dim(a));
}

} // namespace fdg::detail
