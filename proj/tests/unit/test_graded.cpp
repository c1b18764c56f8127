#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "fdg/errors.hpp"
#include "fdg/generators.hpp"
#include "fdg/graded.hpp"
#include "fdg/hom.hpp"

using namespace fdg;
using testing::d_full;
using testing::M;

namespace {

FilteredComplex gen(GeneratorKind kind, int n, std::size_t p, std::size_t length)
{
    return filtered_generator(kind, n, p, length);
}

FilteredComplex two_step_plane()
{
    const Complex plane = direct_sum(sphere(0), sphere(0));
    const ChainMap line = ChainMap::make(sphere(0), plane, {{0, M({{1}, {0}})}});
    return FilteredComplex::make({plane, sphere(0), Complex{}}, {line, ChainMap::zero({}, sphere(0))});
}

GradedModuleComplex torsion_example()
{
    return GradedModuleComplex::make({Complex{}, sphere(0)}, {ChainMap::zero(sphere(0), Complex{})});
}

GradedModuleComplex free_rank_one(std::size_t top)
{
    std::vector<Complex> components(top + 1, sphere(0));
    std::vector<ChainMap> t(top, ChainMap::identity(sphere(0)));
    return GradedModuleComplex::make(components, t);
}

GradedMap identity(const GradedModuleComplex& g)
{
    std::vector<ChainMap> weights;
    for (std::size_t w = 0; w <= g.top_weight(); ++w)
        weights.push_back(ChainMap::identity(g.component(static_cast<int>(w))));
    return GradedMap::make(g, g, weights);
}

ChainMap d0_onto_s0() { return ChainMap::make(disk(0), sphere(0), {{0, M({{1}})}}); }

} // namespace

TEST_CASE("graded modules and the tail rule")
{
    const GradedModuleComplex g = free_rank_one(2);
    CHECK(g.top_weight() == 2);
    CHECK(g.component(-3) == sphere(0));
    CHECK(g.component(3).is_zero());
    CHECK(g.t_map(0) == ChainMap::identity(sphere(0)));
    CHECK(g.t_map(-1) == ChainMap::identity(sphere(0)));
    CHECK(g.t_map(3) == ChainMap::zero(Complex{}, sphere(0)));
    // t-maps must lower the weight by one.
    CHECK_THROWS_AS(GradedModuleComplex::make({sphere(0), disk(0)}, {ChainMap::identity(sphere(0))}),
                    NotAGradedModule);
    CHECK_THROWS_AS(GradedModuleComplex::make({sphere(0), sphere(0)}, {}), NotAGradedModule);
}

TEST_CASE("Rees modules")
{
    const GradedModuleComplex r = rees(gen(GeneratorKind::sphere, 0, 0, 2));
    CHECK(r.component(0) == sphere(0));
    CHECK(r.component(1).is_zero());

    const Complex m = direct_sum(sphere(0), disk(1));
    const FilteredComplex twice = FilteredComplex::make({m, m, Complex{}}, {ChainMap::identity(m), ChainMap::zero({}, m)});
    const GradedModuleComplex rt = rees(twice);
    CHECK(rt.top_weight() == 1);
    CHECK(rt.component(0) == m);
    CHECK(rt.component(1) == m);
    CHECK(rt.t_map(1) == ChainMap::identity(m));
    CHECK(is_torsion_free(rt));
}

TEST_CASE("phi examples")
{
    CHECK(phi(torsion_example()).ambient().is_zero());
    const FilteredComplex full = phi(free_rank_one(2));
    CHECK(full.length() == 3);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(full.level(k) == sphere(0));
    CHECK(full.level(3).is_zero());
    CHECK(phi(rees(two_step_plane())) == two_step_plane());
}

TEST_CASE("torsion-freeness")
{
    CHECK(is_torsion_free(rees(two_step_plane())));
    CHECK_FALSE(is_torsion_free(torsion_example()));
    CHECK(is_torsion_free(free_rank_one(3)));
}

TEST_CASE("unit comparison")
{
    CHECK(is_graded_isomorphism(unit_comparison(free_rank_one(2))));
    CHECK_FALSE(is_graded_isomorphism(unit_comparison(torsion_example())));
    Rng rng(41, 0);
    for (int k = 0; k < 30; ++k) {
        const GradedModuleComplex g = random_graded(rng, Shape{2, -2, 2}, 1 + k % 2, k % 2 == 0);
        bool injective = true;
        for (const auto& t : g.stored_t_maps())
            for (int n = -2; n <= 2; ++n)
                injective = injective && rank(testing::f_full(t, n)) == t.source().dim(n);
        CHECK(is_torsion_free(g) == injective);
        CHECK(is_graded_isomorphism(unit_comparison(g)) == injective);
        // Level dimensions of phi(g) are the ranks of the composite t-maps into weight 0.
        const FilteredComplex f = phi(g);
        ChainMap composite = ChainMap::identity(g.component(0));
        for (std::size_t w = 0; w <= g.top_weight(); ++w) {
            if (w > 0)
                composite = compose(composite, g.t_map(static_cast<int>(w)));
            for (int n = -2; n <= 2; ++n)
                CHECK(f.level(w).dim(n) == rank(testing::f_full(composite, n)));
        }
    }
}

TEST_CASE("graded maps are validated")
{
    const GradedModuleComplex g = free_rank_one(1);
    // Weight maps that do not commute with t.
    CHECK_THROWS_AS(GradedMap::make(g, g, {ChainMap::identity(sphere(0)), ChainMap::zero(sphere(0), sphere(0))}),
                    NotAChainMap);
    CHECK_THROWS_AS(GradedMap::make(g, g, {ChainMap::identity(sphere(0))}), NotAChainMap);
}

TEST_CASE("graded hom examples")
{
    const GradedModuleComplex r = rees(two_step_plane());
    CHECK(graded_hom_weight0(r, r).size() == 3);
    CHECK(filtered_maps_basis(two_step_plane(), two_step_plane()).size() == 3);
    const GradedModuleComplex zero = GradedModuleComplex::make({Complex{}}, {});
    CHECK(graded_hom_weight0(r, zero).empty());
    const GradedModuleComplex rs = rees(gen(GeneratorKind::sphere, 0, 0, 2));
    CHECK(graded_hom_weight0(rs, rs).size() == 1);
    CHECK(graded_ext_weight0_dim(rs, rs, 0) == 1);
    for (int i = -2; i <= 2; ++i)
        CHECK(graded_ext_weight0_dim(zero, rs, i) == 0);
}

TEST_CASE("graded hom matches filtered hom on Rees modules")
{
    Rng rng(42, 0);
    const Shape s{2, -2, 2};
    for (int k = 0; k < 25; ++k) {
        const FilteredComplex x = random_filtered(rng, s, 1 + k % 3), y = random_filtered(rng, s, 1 + (k / 3) % 3);
        const Complex fh = filtered_hom_complex(x, y);
        const std::size_t z0 = fh.dim(0) == 0 ? 0 : fh.dim(0) - rank(d_full(fh, 0));
        CHECK(graded_hom_weight0(rees(x), rees(y)).size() == z0);
        for (int i = -2; i <= 2; ++i)
            CHECK(graded_ext_weight0_dim(rees(x), rees(y), i) == filtered_ext_dim(x, y, i));
        // Every graded map between Rees modules is the Rees image of a filtered map.
        for (const auto& g : graded_hom_weight0(rees(x), rees(y))) {
            std::vector<ChainMap> levels;
            for (std::size_t w = 0; w < std::max(x.length(), y.length()); ++w)
                levels.push_back(w < g.weight_count() ? g.weight(w) : ChainMap::zero(x.level(w), y.level(w)));
            CHECK_NOTHROW(FilteredMap::make(x, y, levels));
        }
    }
}

TEST_CASE("graded fibrations")
{
    const GradedModuleComplex g = rees(two_step_plane());
    CHECK(graded_is_fibration(identity(g)));
    const GradedModuleComplex zero = GradedModuleComplex::make({Complex{}}, {});
    CHECK(graded_is_fibration(GradedMap::make(g, zero, {ChainMap::zero(g.component(0), {}),
                                                        ChainMap::zero(g.component(1), {})})));
    // Level 1 of the inclusion of a trivially filtered S(0) into a two-level S(0) is 0 -> S(0).
    const FilteredComplex src = FilteredComplex::trivial(sphere(0)).padded(2);
    const FilteredComplex tgt = gen(GeneratorKind::sphere, 0, 1, 2);
    const FilteredMap f = FilteredMap::make(src, tgt, {ChainMap::identity(sphere(0)), ChainMap::zero({}, sphere(0))});
    CHECK_FALSE(graded_is_fibration(rees(f)));
    CHECK(graded_is_weak_equivalence(identity(g)));
    CHECK_FALSE(graded_is_weak_equivalence(rees(f)));
}

TEST_CASE("Rees fibration audit")
{
    CHECK(rees_fibration_audit(FilteredMap::identity(two_step_plane())));
    const FilteredMap q = FilteredMap::make(gen(GeneratorKind::disk, 0, 1, 2), gen(GeneratorKind::sphere, 0, 1, 2),
                                            {d0_onto_s0(), d0_onto_s0()});
    CHECK(rees_fibration_audit(q));
    CHECK(graded_is_fibration(rees(q)));
    Rng rng(43, 0);
    for (int k = 0; k < 20; ++k) {
        const std::size_t length = 1 + k % 3;
        const FilteredComplex y = random_filtered(rng, Shape{2, -2, 2}, length);
        const FilteredMap p = random_filtered_fibration(rng, y, random_filtered(rng, Shape{2, -2, 2}, length));
        CHECK(rees_fibration_audit(p));
        const GradedMap r = rees(p);
        for (std::size_t w = 0; w < r.weight_count(); ++w)
            CHECK(r.weight(w) == p.level(w));
    }
}

TEST_CASE("phi inverts Rees exactly on random filtrations")
{
    Rng rng(44, 0);
    for (int k = 0; k < 30; ++k) {
        const FilteredComplex x = random_filtered(rng, Shape{3, -2, 2}, 1 + k % 3);
        CHECK(phi(rees(x)) == x);
        CHECK(is_torsion_free(rees(x)));
    }
}
