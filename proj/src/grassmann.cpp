#include "fdg/grassmann.hpp"

#include "fdg/errors.hpp"

#include <algorithm>

namespace fdg {

namespace {

std::string deg(int n)
{
    return "degree " + std::to_string(n);
}

/// Adds a problem for every degree where H(f) fails to be injective.
void require_injective_on_cohomology(const ChainMap& f, const std::string& what, Validation& v)
{
    const Complex& src = f.source();
    for (int n = src.lo(); n <= src.hi(); ++n) {
        const std::size_t h = cohomology_dim(src, n);
        if (h == 0)
            continue;
        if (rank(induced_on_cohomology(f, n)) != h) {
            v.valid = false;
            v.problems.push_back(what + " is not injective on cohomology in " + deg(n));
        }
    }
}

void fail(Validation& v, std::string problem)
{
    v.valid = false;
    v.problems.push_back(std::move(problem));
}

Shadow image_shadow(const ChainMap& f)
{
    const Complex& target = f.target();
    Shadow s;
    for (int n = target.lo(); n <= target.hi(); ++n) {
        const Matrix image = canonical_column_basis(induced_on_cohomology(f, n));
        s.dims[n] = image.cols();
        s.basis[n] = image;
    }
    return s;
}

} // namespace

Validation validate_grass_point(const GrassPoint& p)
{
    Validation v;
    if (!(p.incl.source() == p.U))
        fail(v, "incl does not start at U");
    if (!(p.incl.target() == p.W))
        fail(v, "incl does not land in W");
    if (!(p.phi.source() == p.W))
        fail(v, "phi does not start at W");
    if (!(p.phi.target() == p.V))
        fail(v, "phi does not land in V");
    if (!v.valid)
        return v;
    if (!is_degreewise_injective(p.incl))
        fail(v, "incl is not degreewise injective");
    if (!is_quasi_iso(p.phi))
        fail(v, "phi is not a quasi-isomorphism");
    require_injective_on_cohomology(compose(p.phi, p.incl), "H(U) -> H(V)", v);
    return v;
}

Shadow shadow_grass(const GrassPoint& p)
{
    const Validation v = validate_grass_point(p);
    if (!v.valid)
        throw InvalidPoint("invalid Grassmannian point: " + v.problems.front());
    return image_shadow(compose(p.phi, p.incl));
}

Validation validate_flag_point(const FlagPoint& p)
{
    Validation v;
    if (!(p.phi.source() == p.W.ambient()))
        fail(v, "phi does not start at F^0 W");
    if (!(p.phi.target() == p.V))
        fail(v, "phi does not land in V");
    if (!v.valid)
        return v;
    if (!is_quasi_iso(p.phi))
        fail(v, "phi is not a quasi-isomorphism");
    for (std::size_t k = 0; k + 1 < p.W.length(); ++k)
        require_injective_on_cohomology(p.W.inclusion(k),
                                        "H(F^" + std::to_string(k + 1) + ") -> H(F^" + std::to_string(k) + ")", v);
    return v;
}

std::vector<Shadow> shadow_flag(const FlagPoint& p)
{
    const Validation v = validate_flag_point(p);
    if (!v.valid)
        throw InvalidPoint("invalid flag point: " + v.problems.front());
    std::vector<Shadow> out;
    for (std::size_t k = 0; k < p.W.length(); ++k)
        out.push_back(image_shadow(compose(p.phi, inclusion_into_ambient(p.W, k))));
    return out;
}

bool shadow_contained(const Shadow& inner, const Shadow& outer)
{
    for (const auto& [n, b] : inner.basis) {
        if (b.cols() == 0)
            continue;
        auto it = outer.basis.find(n);
        if (it == outer.basis.end() || !column_span_contains(it->second, b))
            return false;
    }
    return true;
}

} // namespace fdg
