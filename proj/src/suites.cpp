#include "fdg/suites.hpp"

#include "fdg/dold_kan.hpp"
#include "fdg/errors.hpp"
#include "fdg/generators.hpp"
#include "fdg/graded.hpp"
#include "fdg/grassmann.hpp"
#include "fdg/hom.hpp"
#include "fdg/mapping_space.hpp"
#include "fdg/model.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fdg {

std::size_t SuiteReport::failures() const
{
    std::size_t total = 0;
    for (const auto& p : properties)
        total += p.failures;
    return total;
}

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class Checker {
public:
    Checker(SuiteReport& report, std::size_t index) : report_(report), index_(index) {}

    void check(const std::string& property, bool ok, const std::function<Json()>& dump)
    {
        PropertyResult& p = slot(property);
        ++p.checked;
        if (ok)
            return;
        ++p.failures;
        if (report_.counterexamples.size() < kMaxCounterexamples)
            report_.counterexamples.push_back({index_, property, dump()});
    }

private:
    PropertyResult& slot(const std::string& property)
    {
        for (auto& p : report_.properties)
            if (p.name == property)
                return p;
        report_.properties.push_back({property, 0, 0});
        return report_.properties.back();
    }

    SuiteReport& report_;
    std::size_t index_;
};

using SuiteBody = void (*)(Checker&, Rng&);

Json map_input(const ChainMap& f) { return to_json(f); }

Json pair_input(const Complex& m, const Complex& n)
{
    return Json{{"m", to_json(m)}, {"n", to_json(n)}};
}

Json filtered_pair_input(const FilteredComplex& m, const FilteredComplex& n)
{
    return Json{{"m", to_json(m)}, {"n", to_json(n)}};
}

/// Verifies a claimed lift directly: h i = f and p h = g.
bool is_lift(const ChainMap& h, const ChainMap& i, const ChainMap& p, const Square& s)
{
    return compose(h, i) == s.f && compose(p, h) == s.g;
}

/// Lifts every basis square plus one random square; all must lift and every lift must check out.
void check_lifting(Checker& c, Rng& rng, const std::string& property, const ChainMap& i, const ChainMap& p)
{
    std::vector<Square> squares = commuting_squares_basis(i, p);
    squares.push_back(random_square(rng, i, p));
    const auto lifts = lift_squares(i, p, squares);
    for (std::size_t k = 0; k < squares.size(); ++k) {
        const bool ok = lifts[k].has_value() && is_lift(*lifts[k], i, p, squares[k]);
        c.check(property, ok, [&] { return to_json(LiftingProblem{i, p, squares[k].f, squares[k].g}); });
        if (!ok)
            return;
    }
}

/// Independent quasi-isomorphism test: the mapping cone is acyclic.
bool cone_acyclic(const ChainMap& f)
{
    return is_acyclic(cone(f));
}

const Shape kSmall{2, -3, 3};

void model_axioms(Checker& c, Rng& rng)
{
    {
        const ChainMap i = random_cofibration(rng, random_complex(rng, kSmall), random_complex(rng, kSmall));
        const ChainMap p = random_fibration(rng, random_complex(rng, kSmall), random_acyclic(rng, kSmall));
        c.check("generated cofibration", is_cofibration(i), [&] { return map_input(i); });
        c.check("generated trivial fibration", is_trivial_fibration(p), [&] { return map_input(p); });
        check_lifting(c, rng, "cofibration lifts against trivial fibration", i, p);
    }
    {
        const ChainMap i = random_cofibration(rng, random_complex(rng, kSmall), random_acyclic(rng, kSmall));
        const ChainMap p = random_fibration(rng, random_complex(rng, kSmall), random_complex(rng, kSmall));
        c.check("generated trivial cofibration", is_trivial_cofibration(i), [&] { return map_input(i); });
        c.check("generated fibration", is_fibration(p), [&] { return map_input(p); });
        check_lifting(c, rng, "trivial cofibration lifts against fibration", i, p);
    }
    {
        // a : X -> B, b : B -> N, and their composite.
        const Complex base = random_complex(rng, kSmall);
        const Complex kernel = rng.coin() ? random_acyclic(rng, kSmall) : random_complex(rng, kSmall);
        const ChainMap a = random_fibration(rng, base, kernel);
        ChainMap b_map;
        switch (rng.below(3)) {
        case 0:
            b_map = random_cofibration(rng, base, random_acyclic(rng, kSmall));
            break;
        case 1:
            b_map = random_cofibration(rng, base, random_complex(rng, kSmall));
            break;
        default:
            b_map = random_chain_map(rng, base, random_complex(rng, kSmall));
        }
        const ChainMap& b = b_map;
        const ChainMap ba = compose(b, a);
        int quasi = 0;
        for (const ChainMap* f : {&a, &b, &ba}) {
            const bool q = cone_acyclic(*f);
            c.check("quasi-isomorphism matches cone acyclicity", is_quasi_iso(*f) == q,
                    [&] { return map_input(*f); });
            quasi += q ? 1 : 0;
        }
        c.check("two out of three", quasi != 2, [&] { return Json{{"a", map_input(a)}, {"b", map_input(b)}}; });

        // f is a retract of f (+) id_E through the summand inclusions and projections.
        const Complex e = random_complex(rng, kSmall);
        const ChainMap& f = rng.coin() ? a : b;
        const ChainMap big = direct_sum(f, ChainMap::identity(e));
        const ChainMap in_src = inclusion_first(f.source(), e), out_src = projection_first(f.source(), e);
        const ChainMap in_tgt = inclusion_first(f.target(), e), out_tgt = projection_first(f.target(), e);
        const bool diagram = compose(out_src, in_src) == ChainMap::identity(f.source()) &&
                             compose(out_tgt, in_tgt) == ChainMap::identity(f.target()) &&
                             compose(big, in_src) == compose(in_tgt, f) && compose(out_tgt, big) == compose(f, out_src);
        c.check("retract diagram commutes", diagram, [&] { return map_input(f); });
        c.check("retract closure of quasi-isomorphisms", !is_quasi_iso(big) || is_quasi_iso(f),
                [&] { return map_input(f); });
        c.check("retract closure of fibrations", !is_fibration(big) || is_fibration(f), [&] { return map_input(f); });
        c.check("retract closure of cofibrations", !is_cofibration(big) || is_cofibration(f),
                [&] { return map_input(f); });
    }
    {
        const ChainMap f = random_chain_map(rng, random_complex(rng, kSmall), random_complex(rng, kSmall));
        const auto [j, q] = factor_trivcof_fib(f);
        c.check("trivial cofibration then fibration composes to f", compose(q, j) == f, [&] { return map_input(f); });
        c.check("first factorization classes", is_trivial_cofibration(j) && is_fibration(q),
                [&] { return map_input(f); });
        const auto [i, p] = factor_cof_trivfib(f);
        c.check("cofibration then trivial fibration composes to f", compose(p, i) == f, [&] { return map_input(f); });
        c.check("second factorization classes", is_cofibration(i) && is_trivial_fibration(p),
                [&] { return map_input(f); });
    }
}

void generator_detection(Checker& c, Rng& rng)
{
    const Shape shape{2, -3, 3};
    const Complex y = random_complex(rng, shape);
    ChainMap p;
    switch (rng.below(5)) {
    case 0:
        p = random_fibration(rng, y, random_complex(rng, shape));
        break;
    case 1:
        p = random_fibration(rng, y, random_acyclic(rng, shape));
        break;
    case 2:
        p = random_chain_map(rng, random_complex(rng, shape), y);
        break;
    case 3:
        p = random_cofibration(rng, y, random_complex(rng, shape));
        break;
    default: {
        const ChainMap q = random_fibration(rng, y, random_complex(rng, shape));
        p = compose(q, random_chain_map(rng, random_complex(rng, shape), q.source()));
    }
    }
    c.check("fibration iff lifts against 0 -> D(n)", is_fibration(p) == lifts_against_disk_generators(p),
            [&] { return map_input(p); });
    c.check("trivial fibration iff lifts against S(n+1) -> D(n)",
            is_trivial_fibration(p) == lifts_against_boundary_generators(p), [&] { return map_input(p); });
}

FilteredComplex sum_of_filtered_disks(Rng& rng, std::size_t length)
{
    FilteredComplex k = FilteredComplex::trivial(Complex{}).padded(length);
    const std::size_t count = 1 + rng.below(2);
    for (std::size_t j = 0; j < count; ++j)
        k = direct_sum(k, filtered_generator(GeneratorKind::disk, rng.range(-2, 1), rng.below(length), length));
    return k;
}

/// The identity on level 0 and zero deeper, from the trivial filtration on the ambient of x.
FilteredMap coarsening(const FilteredComplex& x)
{
    const FilteredComplex t = FilteredComplex::trivial(x.ambient());
    std::vector<ChainMap> levels{ChainMap::identity(x.ambient())};
    for (std::size_t k = 1; k < std::max<std::size_t>(1, x.length()); ++k)
        levels.push_back(ChainMap::zero(Complex{}, x.level(k)));
    return FilteredMap::make(t, x, std::move(levels));
}

void filtered_generator_detection(Checker& c, Rng& rng)
{
    const Shape shape{2, -2, 2};
    const std::size_t length = 1 + rng.below(3);
    const FilteredComplex y = random_filtered(rng, shape, length);
    FilteredMap p;
    switch (rng.below(4)) {
    case 0:
        p = random_filtered_fibration(rng, y, random_filtered(rng, shape, length));
        break;
    case 1:
        p = random_filtered_fibration(rng, y, sum_of_filtered_disks(rng, length));
        break;
    case 2:
        p = random_filtered_map(rng, random_filtered(rng, shape, length), y);
        break;
    default: {
        const FilteredMap q = random_filtered_fibration(rng, y, random_filtered(rng, shape, length));
        p = compose(q, coarsening(q.source()));
    }
    }
    c.check("filtered fibration iff lifts against 0 -> D(n,p)",
            is_filtered_fibration(p) == filtered_lifts_against_disk_generators(p), [&] { return to_json(p); });
    c.check("filtered trivial fibration iff lifts against S(n+1,p) -> D(n,p)",
            is_filtered_trivial_fibration(p) == filtered_lifts_against_boundary_generators(p),
            [&] { return to_json(p); });
}

void ext_oracle(Checker& c, Rng& rng)
{
    const Shape shape{4, -3, 3};
    const Complex m = random_complex(rng, shape);
    const Complex n = random_complex(rng, shape);
    if (!m.is_zero() && !n.is_zero())
        for (int i = n.lo() - m.hi() - 1; i <= n.hi() - m.lo() + 1; ++i)
            c.check("ext matches semisimple count", ext_dim(m, n, i) == semisimple_ext_oracle(m, n, i),
                    [&] { return pair_input(m, n); });

    const Shape small{2, -1, 1};
    const Complex a = random_complex(rng, small);
    const Complex b = random_complex(rng, small);
    const int s = rng.range(-1, 3);
    const Complex bs = shift(b, s);
    const Complex truncated = truncate_nonneg(hom_complex(a, bs));
    for (std::size_t i = 0; i <= 3; ++i) {
        const std::size_t pi = pi_dim(a, bs, i);
        c.check("pi_i of mapping space equals Ext^{s-i}", pi == ext_dim(a, b, s - static_cast<int>(i)),
                [&] { return Json{{"m", to_json(a)}, {"n", to_json(b)}, {"s", s}, {"i", i}}; });
        c.check("pi_i equals H_i of truncated HOM", pi == cohomology_dim(truncated, -static_cast<int>(i)),
                [&] { return pair_input(a, bs); });
    }

    const Shape tiny{1, -1, 1};
    const FilteredComplex fa = random_filtered(rng, tiny, 1 + rng.below(2));
    const FilteredComplex fb = random_filtered(rng, tiny, 1 + rng.below(2));
    const int t = rng.range(-1, 2);
    const FilteredComplex fbs = shift(fb, t);
    for (std::size_t i = 0; i <= 2; ++i)
        c.check("filtered pi_i equals filtered Ext^{s-i}",
                pi_dim(fa, fbs, i) == filtered_ext_dim(fa, fb, t - static_cast<int>(i)),
                [&] { return Json{{"m", to_json(fa)}, {"n", to_json(fb)}, {"s", t}, {"i", i}}; });
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> pascal(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        pascal[r].assign(r + 1, 1);
        for (std::size_t j = 1; j < r; ++j)
            pascal[r][j] = pascal[r - 1][j - 1] + pascal[r - 1][j];
    }
    return k <= n ? pascal[n][k] : 0;
}

void dold_kan_roundtrip(Checker& c, Rng& rng)
{
    const Complex v = random_chain_complex(rng, 3, rng.below(4));
    const std::size_t top = v.is_zero() ? 0 : static_cast<std::size_t>(-v.lo());
    const std::size_t L = top + 2;
    const SimplicialVS s = denormalize(v, L);
    auto dump = [&] { return Json{{"complex", to_json(v)}, {"levels", L}}; };
    c.check("simplicial identities", check_simplicial_identities(s), dump);
    bool dims_ok = s.top_level() == L;
    for (std::size_t n = 0; n <= L && dims_ok; ++n) {
        std::size_t expected = 0;
        for (std::size_t p = 0; p <= n; ++p)
            expected += binomial(n, p) * chain_dim(v, static_cast<int>(p));
        dims_ok = s.dim(n) == expected;
    }
    c.check("level dimensions follow the binomial formula", dims_ok, dump);
    const Complex back = normalize(s);
    bool degreewise = true;
    for (int n = 0; n < static_cast<int>(L); ++n)
        degreewise = degreewise && chain_dim(back, n) == chain_dim(v, n);
    c.check("normalization recovers dimensions", degreewise, dump);
    c.check("normalization recovers the complex up to isomorphism", is_isomorphic(back, v), dump);
}

std::size_t cocycle_dim(const Complex& c, int n)
{
    if (c.dim(n) == 0)
        return 0;
    return c.dim(n + 1) == 0 ? c.dim(n) : c.dim(n) - rank(c.d(n));
}

bool levelwise_equal(const FilteredMap& f, const GradedMap& g)
{
    for (std::size_t w = 0; w < g.weight_count(); ++w)
        if (!(g.weight(w) == f.level(w)))
            return false;
    return true;
}

void rees_audit(Checker& c, Rng& rng)
{
    const Shape shape{2, -2, 2};
    const std::size_t length = 1 + rng.below(3);
    const FilteredComplex x = random_filtered(rng, shape, length);
    const FilteredComplex y = random_filtered(rng, shape, 1 + rng.below(3));
    const GradedModuleComplex rx = rees(x);
    const GradedModuleComplex ry = rees(y);
    c.check("phi after Rees is the identity", phi(rx) == x, [&] { return to_json(x); });
    c.check("Rees output is torsion-free", is_torsion_free(rx), [&] { return to_json(x); });
    c.check("unit comparison of a Rees module is an isomorphism", is_graded_isomorphism(unit_comparison(rx)),
            [&] { return to_json(rx); });

    const FilteredMap p = random_filtered_fibration(rng, x, random_filtered(rng, shape, length));
    c.check("Rees preserves fibrations", rees_fibration_audit(p) && graded_is_fibration(rees(p)),
            [&] { return to_json(p); });

    FilteredMap f;
    switch (rng.below(3)) {
    case 0:
        f = random_filtered_fibration(rng, x, sum_of_filtered_disks(rng, length));
        break;
    case 1:
        f = random_filtered_map(rng, x, y);
        break;
    default:
        f = FilteredMap::identity(x);
    }
    const GradedMap rf = rees(f);
    c.check("Rees of a map is the same map weightwise", levelwise_equal(f, rf), [&] { return to_json(f); });
    c.check("weak equivalences correspond", is_filtered_weak_equivalence(f) == graded_is_weak_equivalence(rf),
            [&] { return to_json(f); });

    const std::size_t graded_maps = graded_hom_weight0(rx, ry).size();
    c.check("graded maps biject with filtered maps", graded_maps == filtered_maps_basis(x, y).size(),
            [&] { return filtered_pair_input(x, y); });
    c.check("graded maps count degree-0 cocycles of filtered HOM",
            graded_maps == cocycle_dim(filtered_hom_complex(x, y), 0), [&] { return filtered_pair_input(x, y); });
    for (int i = -2; i <= 2; ++i)
        c.check("filtered Ext equals weight-0 graded Ext",
                filtered_ext_dim(x, y, i) == graded_ext_weight0_dim(rx, ry, i),
                [&] { return filtered_pair_input(x, y); });
}

void graded_essential_image(Checker& c, Rng& rng)
{
    const bool torsion_free = rng.coin();
    const GradedModuleComplex g = random_graded(rng, Shape{2, -2, 2}, 1 + rng.below(2), torsion_free);
    bool injective = true;
    for (const auto& t : g.stored_t_maps())
        for (int n = t.lo(); n <= t.hi(); ++n)
            injective = injective && rank(t.at(n)) == t.source().dim(n);
    c.check("torsion-free iff every t-map is injective", is_torsion_free(g) == injective,
            [&] { return to_json(g); });
    if (torsion_free)
        c.check("torsion-free generator output", is_torsion_free(g), [&] { return to_json(g); });
    c.check("unit comparison is an isomorphism iff torsion-free",
            is_graded_isomorphism(unit_comparison(g)) == is_torsion_free(g), [&] { return to_json(g); });
    c.check("phi of the unit comparison target recovers phi",
            phi(unit_comparison(g).target()) == phi(g), [&] { return to_json(g); });
}

Matrix block_or_zero(const std::map<int, Matrix>& h, int n, std::size_t rows, std::size_t cols)
{
    auto it = h.find(n);
    if (it == h.end() || it->second.rows() != rows || it->second.cols() != cols)
        return Matrix(rows, cols);
    return it->second;
}

Matrix differential_or_zero(const Complex& k, int n)
{
    const Matrix& d = k.d(n);
    if (d.rows() == k.dim(n + 1) && d.cols() == k.dim(n))
        return d;
    return Matrix(k.dim(n + 1), k.dim(n));
}

void contracting_homotopies(Checker& c, Rng& rng)
{
    const Complex k = random_acyclic(rng, Shape{4, -3, 3});
    const auto h = contracting_homotopy(k);
    bool ok = true;
    for (int n = k.lo() - 1; n <= k.hi() + 1; ++n) {
        const Matrix dh = differential_or_zero(k, n - 1) * block_or_zero(h, n, k.dim(n - 1), k.dim(n));
        const Matrix hd = block_or_zero(h, n + 1, k.dim(n), k.dim(n + 1)) * differential_or_zero(k, n);
        ok = ok && dh + hd == Matrix::identity(k.dim(n));
    }
    c.check("dh + hd = id", ok, [&] { return to_json(k); });
    c.check("library check agrees", is_contracting_homotopy(k, h), [&] { return to_json(k); });
}

void obstruction(Checker& c, Rng& rng)
{
    const Shape shape{2, -2, 2};
    const ChainMap theta = random_quasi_iso(rng, shape);
    const Complex target = random_complex(rng, shape);
    c.check("generated quasi-isomorphism", cone_acyclic(theta), [&] { return map_input(theta); });
    c.check("obstruction group vanishes", obstruction_group(theta, target) == 0,
            [&] { return Json{{"theta", map_input(theta)}, {"c", to_json(target)}}; });
}

/// V = Q^d in degree 0.
Complex degree_zero(std::size_t d)
{
    return Complex::make({{0, d}}, {});
}

/// Subcomplex of w spanned by random combinations of degree-0 cocycles (so it sits in degree 0).
ChainMap random_cycle_subspace(Rng& rng, const Complex& w)
{
    std::map<int, Matrix> spanning;
    if (w.dim(0) > 0) {
        const Matrix cycles = kernel_basis(differential_or_zero(w, 0));
        spanning[0] = cycles * random_matrix(rng, cycles.cols(), rng.below(cycles.cols() + 1));
    }
    return subcomplex_inclusion(w, spanning);
}

/// Canonical basis of the image of H^0(U) in H^0(V) for a degree-0 ambient V, from first principles.
Matrix degree_zero_shadow(const Complex& v, const ChainMap& u_to_v)
{
    const Complex& u = u_to_v.source();
    if (u.dim(0) == 0 || v.dim(0) == 0)
        return Matrix(v.dim(0), 0);
    const Matrix images = u_to_v.at(0) * kernel_basis(differential_or_zero(u, 0));
    const auto coords = solve_linear(cohomology(v).representatives.at(0), images);
    const RrefResult r = rref_rank(coords->transpose());
    return r.reduced.rows_range(0, r.rank).transpose();
}

/// H^*(U) -> H^*(V) injective, for V concentrated in degree 0.
bool degree_zero_valid(const ChainMap& u_to_v)
{
    const Complex& u = u_to_v.source();
    for (int n = u.lo(); n <= u.hi(); ++n)
        if (n != 0 && cohomology_dim(u, n) != 0)
            return false;
    if (u.dim(0) == 0)
        return true;
    const Matrix images = u_to_v.at(0) * kernel_basis(differential_or_zero(u, 0));
    return rank(images) == cohomology_dim(u, 0);
}

void grassmann(Checker& c, Rng& rng)
{
    const Complex v = degree_zero(1 + rng.below(4));
    const ChainMap phi1 = random_fibration(rng, v, random_acyclic(rng, Shape{2, -2, 2}));
    const Complex& w = phi1.source();
    const ChainMap incl = rng.coin() ? random_subcomplex(rng, w) : random_cycle_subspace(rng, w);
    const GrassPoint p{v, incl.source(), w, incl, phi1};
    auto dump = [&] { return to_json(p); };
    const bool valid = validate_grass_point(p).valid;
    c.check("validity matches direct injectivity", valid == degree_zero_valid(compose(phi1, incl)), dump);

    // W = V, phi = id: points are exactly subspaces of V.
    const ChainMap sub = random_cycle_subspace(rng, v);
    const GrassPoint plain{v, sub.source(), v, sub, ChainMap::identity(v)};
    const Shadow plain_shadow = shadow_grass(plain);
    c.check("identity point shadow is the subspace",
            plain_shadow.basis.at(0) == degree_zero_shadow(v, sub) && plain_shadow.dims.at(0) == sub.source().dim(0),
            [&] { return to_json(plain); });

    if (!valid)
        return;
    const Shadow s1 = shadow_grass(p);
    c.check("shadow is the image subspace", s1.basis.at(0) == degree_zero_shadow(v, compose(phi1, incl)), dump);
    c.check("shadow dimension bounded by H(V)", s1.dims.at(0) <= v.dim(0) && s1.dims.size() == 1, dump);

    // A second point through a trivial cofibration psi : W -> W2 and a lift of phi1 along it.
    const ChainMap psi = random_cofibration(rng, w, random_acyclic(rng, Shape{2, -2, 2}));
    const ChainMap to_zero = ChainMap::zero(v, Complex{});
    const auto phi2 = lift_square(psi, to_zero, phi1, ChainMap::zero(psi.target(), Complex{}));
    c.check("comparison lift exists", phi2.has_value(), dump);
    if (!phi2)
        return;
    const GrassPoint q{v, incl.source(), psi.target(), compose(psi, incl), *phi2};
    c.check("quasi-isomorphic point is valid", validate_grass_point(q).valid, [&] { return to_json(q); });
    c.check("quasi-isomorphic points have equal shadows", shadow_grass(q) == s1,
            [&] { return Json{{"p", to_json(p)}, {"q", to_json(q)}}; });
}

void flag(Checker& c, Rng& rng)
{
    const Complex v = degree_zero(1 + rng.below(4));
    const ChainMap phi1 = random_fibration(rng, v, random_acyclic(rng, Shape{2, -2, 2}));
    const Complex& w = phi1.source();
    const std::size_t length = 2 + rng.below(2);
    std::vector<Complex> levels{w};
    std::vector<ChainMap> inclusions;
    for (std::size_t k = 1; k < length; ++k) {
        inclusions.push_back(random_cycle_subspace(rng, levels.back()));
        levels.push_back(inclusions.back().source());
    }
    levels.emplace_back();
    inclusions.push_back(ChainMap::zero({}, levels[length - 1]));
    const FilteredComplex filtration = FilteredComplex::make(levels, inclusions);
    const FlagPoint p{v, filtration, phi1};
    auto dump = [&] { return to_json(p); };

    bool expected_valid = true;
    for (std::size_t k = 0; k < length; ++k)
        expected_valid = expected_valid && degree_zero_valid(compose(phi1, inclusion_into_ambient(filtration, k)));
    const bool valid = validate_flag_point(p).valid;
    c.check("flag validity matches direct injectivity", valid == expected_valid, dump);
    if (!valid)
        return;
    const auto shadows = shadow_flag(p);
    c.check("one shadow per level", shadows.size() == length, dump);
    c.check("level 0 shadow is all of H(V)", shadows.at(0).dims.at(0) == v.dim(0), dump);
    bool nested = true, exact = true;
    for (std::size_t k = 0; k < shadows.size(); ++k) {
        if (k + 1 < shadows.size())
            nested = nested && shadow_contained(shadows[k + 1], shadows[k]);
        exact = exact && shadows[k].basis.at(0) ==
                             degree_zero_shadow(v, compose(phi1, inclusion_into_ambient(filtration, k)));
    }
    c.check("shadows are nested", nested, dump);
    c.check("level shadows are the image subspaces", exact, dump);

    // Adding an acyclic summand with the trivial filtration does not move the flag.
    const Complex a = random_acyclic(rng, Shape{2, -2, 2});
    const FilteredComplex bigger = direct_sum(filtration, FilteredComplex::trivial(a).padded(length));
    const FlagPoint q{v, bigger, compose(phi1, projection_first(w, a))};
    c.check("flag shadows invariant under acyclic summands", shadow_flag(q) == shadows,
            [&] { return Json{{"p", to_json(p)}, {"q", to_json(q)}}; });
}

void generators(Checker& c, Rng& rng)
{
    const std::uint64_t seed = rng.next();
    const Complex a = random_complex(seed, 3, -2, 2);
    c.check("random complex is deterministic", a == random_complex(seed, 3, -2, 2), [&] { return to_json(a); });
    bool squares_zero = true;
    for (int n = a.lo(); n + 1 < a.hi(); ++n)
        squares_zero = squares_zero && (differential_or_zero(a, n + 1) * differential_or_zero(a, n)).is_zero();
    c.check("d squares to zero", squares_zero, [&] { return to_json(a); });
    const std::size_t length = 1 + rng.below(3);
    const FilteredComplex f = random_filtered(seed, 3, -2, 2, length);
    c.check("random filtration is deterministic", f == random_filtered(seed, 3, -2, 2, length),
            [&] { return to_json(f); });
    bool nested = f.length() == length && f.level(length).is_zero();
    for (std::size_t k = 0; k < f.length(); ++k)
        nested = nested && is_degreewise_injective(f.inclusion(k));
    c.check("filtration levels are nested subcomplexes", nested, [&] { return to_json(f); });
}

const std::map<std::string, SuiteBody>& registry()
{
    static const std::map<std::string, SuiteBody> suites{
        {"contracting-homotopy", contracting_homotopies},
        {"dold-kan-roundtrip", dold_kan_roundtrip},
        {"ext-oracle", ext_oracle},
        {"filtered-generator-detection", filtered_generator_detection},
        {"flag", flag},
        {"generator-detection", generator_detection},
        {"generators", generators},
        {"graded-essential-image", graded_essential_image},
        {"grassmann", grassmann},
        {"model-axioms", model_axioms},
        {"obstruction", obstruction},
        {"rees-audit", rees_audit},
    };
    return suites;
}

} // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> names;
    for (const auto& [name, body] : registry())
        names.push_back(name);
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t count)
{
    auto it = registry().find(name);
    if (it == registry().end())
        throw UnknownSuite("unknown suite '" + name + "'");
    SuiteReport report{name, seed, count, {}, {}};
    for (std::size_t index = 0; index < count; ++index) {
        Checker checker(report, index);
        Rng rng(seed, index);
        try {
            it->second(checker, rng);
        } catch (const Error& e) {
            const std::string what = e.what();
            checker.check("no domain errors", false, [&] { return Json{{"error", what}}; });
        }
    }
    return report;
}

Json to_json(const SuiteReport& r)
{
    Json properties = Json::array();
    for (const auto& p : r.properties)
        properties.push_back(Json{{"name", p.name}, {"checked", p.checked}, {"failures", p.failures}});
    Json counterexamples = Json::array();
    for (const auto& c : r.counterexamples)
        counterexamples.push_back(Json{{"index", c.index}, {"property", c.property}, {"input", c.input}});
    return Json{{"suite", r.suite},
                {"seed", r.seed},
                {"count", r.count},
                {"passed", r.passed()},
                {"properties", std::move(properties)},
                {"counterexamples", std::move(counterexamples)}};
}

} // namespace fdg
