#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "fdg/errors.hpp"
#include "fdg/generators.hpp"
#include "fdg/hom.hpp"
#include "fdg/model.hpp"

using namespace fdg;
using testing::cx;
using testing::d_full;
using testing::h_dim;
using testing::M;

TEST_CASE("constructing complexes")
{
    const Complex d0 = cx({{0, 1}, {1, 1}}, {{0, M({{1}})}});
    CHECK(d0 == disk(0));
    CHECK(d0.lo() == 0);
    CHECK(d0.hi() == 1);

    const Complex split = cx({{0, 1}, {1, 1}}, {{0, M({{0}})}});
    CHECK(is_isomorphic(split, direct_sum(sphere(0), sphere(1))));

    CHECK_THROWS_AS(cx({{0, 1}, {1, 1}, {2, 1}}, {{0, M({{1}})}, {1, M({{1}})}}), NotAComplex);
    CHECK_THROWS_AS(cx({{0, 1}, {1, 2}}, {{0, M({{1}})}}), Error);

    // Trimming: zero dimensions at the ends are not part of the support.
    const Complex trimmed = cx({{-2, 0}, {0, 1}, {3, 0}});
    CHECK(trimmed.lo() == 0);
    CHECK(trimmed.hi() == 0);
    CHECK(Complex{}.is_zero());
    CHECK(cx({{0, 0}}).is_zero());
}

TEST_CASE("generators")
{
    const Complex d = disk(0);
    CHECK(d.dims() == std::map<int, std::size_t>{{0, 1}, {1, 1}});
    CHECK(is_acyclic(d));
    const Complex s = sphere(2);
    CHECK(cohomology_dim(s, 2) == 1);
    CHECK(disk(-1, 3).dims() == std::map<int, std::size_t>{{-1, 3}, {0, 3}});
    CHECK(disk(-1, 3).d(-1) == Matrix::identity(3));
}

TEST_CASE("shift and suspension")
{
    CHECK(suspension(sphere(1)) == sphere(0));
    CHECK(shift(disk(0), 1) == disk(-1));
    CHECK(suspension(disk(0)).d(-1) == M({{-1}}));
    CHECK(shift(disk(0), 1).d(-1) == M({{1}}));

    Rng rng(3, 0);
    for (int k = 0; k < 20; ++k) {
        const Complex m = random_complex(rng, Shape{3, -2, 2});
        CHECK(shift(shift(m, 2), -3) == shift(m, -1));
        CHECK(is_isomorphic(suspension(suspension(m)), shift(m, 2)));
        for (int n = -3; n <= 3; ++n)
            CHECK(cohomology_dim(shift(m, 1), n) == cohomology_dim(m, n + 1));
    }
}

TEST_CASE("cones")
{
    CHECK(is_acyclic(cone(ChainMap::identity(sphere(0)))));
    Rng rng(4, 0);
    for (int k = 0; k < 20; ++k) {
        const Complex m = random_complex(rng, Shape{3, -2, 2});
        CHECK(is_isomorphic(cone(ChainMap::zero(Complex{}, m)), m));
        CHECK(is_isomorphic(cone(ChainMap::zero(m, Complex{})), suspension(m)));
    }
    // cone^n = src^{n+1} + tgt^n with blocks (-d, 0; f, d).
    const ChainMap f = ChainMap::make(sphere(1), disk(0), {{1, M({{1}})}});
    const Complex c = cone(f);
    CHECK(c.dim(0) == 2);
    CHECK(c.dim(1) == 1);
    CHECK(c.d(0) == M({{1, 1}}));
    CHECK(c.d(-1).empty());
}

TEST_CASE("cohomology examples")
{
    for (int n = -1; n <= 2; ++n)
        CHECK(cohomology_dim(disk(0), n) == 0);
    CHECK(cohomology_dim(sphere(2), 2) == 1);
    CHECK(cohomology_dim(sphere(2), 1) == 0);
    const Complex c = cx({{0, 2}, {1, 1}}, {{0, M({{1, 0}})}});
    CHECK(cohomology_dim(c, 0) == 1);
    CHECK(cohomology_dim(c, 1) == 0);
    const auto report = cohomology(c);
    CHECK(report.dims == std::map<int, std::size_t>{{0, 1}, {1, 0}});
    CHECK((c.d(0) * report.representatives.at(0)).is_zero());
}

TEST_CASE("cohomology agrees with rank-nullity and the Euler characteristic")
{
    Rng rng(5, 0);
    for (int k = 0; k < 60; ++k) {
        const Complex c = random_complex(rng, Shape{4, -3, 3});
        long chi_chain = 0, chi_h = 0;
        const auto report = cohomology(c);
        for (int n = -4; n <= 4; ++n) {
            CHECK(cohomology_dim(c, n) == h_dim(c, n));
            const long sign = n % 2 == 0 ? 1 : -1;
            chi_chain += sign * static_cast<long>(c.dim(n));
            chi_h += sign * static_cast<long>(h_dim(c, n));
        }
        CHECK(chi_chain == chi_h);
        for (const auto& [n, reps] : report.representatives) {
            if (reps.cols() == 0)
                continue;
            CHECK((d_full(c, n) * reps).is_zero());
            CHECK(cohomology_coordinates(c, n, reps) == Matrix::identity(reps.cols()));
        }
    }
}

TEST_CASE("quasi-isomorphism examples")
{
    CHECK(is_quasi_iso(ChainMap::identity(disk(2))));
    CHECK(is_quasi_iso(ChainMap::zero(disk(0), Complex{})));
    CHECK_FALSE(is_quasi_iso(ChainMap::zero(sphere(0), Complex{})));
}

TEST_CASE("cohomology is functorial")
{
    Rng rng(6, 0);
    for (int k = 0; k < 30; ++k) {
        const Shape s{3, -2, 2};
        const Complex a = random_complex(rng, s), b = random_complex(rng, s), c = random_complex(rng, s);
        const ChainMap f = random_chain_map(rng, a, b);
        const ChainMap g = random_chain_map(rng, b, c);
        for (int n = -2; n <= 2; ++n) {
            const Matrix hf = induced_on_cohomology(f, n), hg = induced_on_cohomology(g, n);
            const Matrix hgf = induced_on_cohomology(compose(g, f), n);
            CHECK(hgf.rows() == h_dim(c, n));
            CHECK(hgf.cols() == h_dim(a, n));
            if (hgf.rows() > 0 && hgf.cols() > 0)
                CHECK(hgf == hg * hf);
        }
        CHECK(is_quasi_iso(f) == is_acyclic(cone(f)));
    }
}

TEST_CASE("chain maps are validated")
{
    CHECK_THROWS_AS(ChainMap::make(disk(0), sphere(0), {{0, M({{1}})}, {1, M({{1}})}}), Error);
    // S(1) -> D(0) in degree 1 commutes; in degree 0 there is nothing to check.
    CHECK_NOTHROW(ChainMap::make(sphere(1), disk(0), {{1, M({{1}})}}));
    // D(0) -> S(0) identity in degree 0: d f = 0 and f d = 0 in degree 0 -> 1.
    CHECK_NOTHROW(ChainMap::make(disk(0), sphere(0), {{0, M({{1}})}}));
    // S(0) -> D(0) identity in degree 0 is not a chain map (d f != 0).
    CHECK_THROWS_AS(ChainMap::make(sphere(0), disk(0), {{0, M({{1}})}}), NotAChainMap);
}

TEST_CASE("kernels, cokernels and subcomplexes")
{
    Rng rng(7, 0);
    for (int k = 0; k < 30; ++k) {
        const Shape s{3, -2, 2};
        const Complex a = random_complex(rng, s), b = random_complex(rng, s);
        const ChainMap f = random_chain_map(rng, a, b);
        const ChainMap ker = kernel_inclusion(f);
        const ChainMap coker = cokernel_projection(f);
        CHECK(is_degreewise_injective(ker));
        CHECK(is_degreewise_surjective(coker));
        CHECK(compose(f, ker) == ChainMap::zero(ker.source(), b));
        CHECK(compose(coker, f) == ChainMap::zero(a, coker.target()));
        for (int n = -2; n <= 2; ++n) {
            const std::size_t r = rank(testing::f_full(f, n));
            CHECK(ker.source().dim(n) + r == a.dim(n));
            CHECK(coker.target().dim(n) + r == b.dim(n));
        }
        const ChainMap sub = random_subcomplex(rng, a);
        CHECK(is_degreewise_injective(sub));
    }
}

TEST_CASE("direct sums add cohomology")
{
    Rng rng(8, 0);
    for (int k = 0; k < 20; ++k) {
        const Complex a = random_complex(rng, Shape{3, -2, 2}), b = random_complex(rng, Shape{3, -1, 3});
        const Complex s = direct_sum(a, b);
        for (int n = -3; n <= 4; ++n)
            CHECK(cohomology_dim(s, n) == h_dim(a, n) + h_dim(b, n));
        CHECK(compose(projection_first(a, b), inclusion_first(a, b)) == ChainMap::identity(a));
        CHECK(compose(projection_second(a, b), inclusion_first(a, b)) == ChainMap::zero(a, b));
    }
}

TEST_CASE("isomorphism of complexes")
{
    CHECK(is_isomorphic(disk(0), conjugate(disk(0), {{0, M({{2}})}, {1, M({{-3}})}})));
    CHECK_FALSE(is_isomorphic(disk(0), direct_sum(sphere(0), sphere(1))));
    CHECK_FALSE(is_isomorphic(sphere(0), sphere(1)));
}

TEST_CASE("HOM complex examples")
{
    const Complex h = hom_complex(sphere(0), sphere(1));
    CHECK(h.dims() == std::map<int, std::size_t>{{1, 1}});
    CHECK(chain_dim(h, -1) == 1);
    CHECK(hom_complex(disk(0), Complex{}).is_zero());

    Rng rng(9, 0);
    for (int k = 0; k < 30; ++k) {
        const Complex m = random_complex(rng, Shape{2, -2, 2}), n = random_complex(rng, Shape{2, -2, 2});
        const Complex hom = hom_complex(m, n);
        // Degree-0 cocycles are exactly the chain maps.
        const std::size_t cocycles = hom.dim(0) == 0 ? 0 : hom.dim(0) - rank(d_full(hom, 0));
        CHECK(cocycles == chain_maps_basis(m, n).size());
        for (int i = -5; i <= 5; ++i)
            CHECK(hom.dim(i) == hom_dim(m, n, i));
    }
}

TEST_CASE("HOM differential by hand on a pair of disks")
{
    // HOM(D(0), D(0)) in degree 0: f = (f0, f1); delta f = (f1 - f0) in degrees 0 -> 1 components.
    const Complex h = hom_complex(disk(0), disk(0));
    CHECK(h.dim(-1) == 1);
    CHECK(h.dim(0) == 2);
    CHECK(h.dim(1) == 1);
    CHECK(is_acyclic(h));
    const auto slots = hom_slots(disk(0), disk(0), 0);
    CHECK(slots.size() == 2);
    const std::map<int, Matrix> family{{0, M({{1}})}, {1, M({{0}})}};
    const auto delta = hom_differential(disk(0), disk(0), 0, family);
    // (d f - f d) on degree 0: d^0 f^0 - f^1 d^0 = 1 - 0.
    CHECK(delta.at(0) == M({{1}}));
    const Matrix flat = pack_graded_map(disk(0), disk(0), 0, family);
    CHECK(unpack_graded_map(disk(0), disk(0), 0, flat) == family);
}

TEST_CASE("Ext examples")
{
    CHECK(ext_dim(sphere(0), sphere(0), 0) == 1);
    CHECK(ext_dim(sphere(0), sphere(1), 1) == 1);
    for (int i = -3; i <= 3; ++i) {
        if (i != 1)
            CHECK(ext_dim(sphere(0), sphere(1), i) == 0);
        CHECK(ext_dim(disk(0), sphere(0), i) == 0);
        CHECK(semisimple_ext_oracle(disk(0), sphere(i), i) == 0);
    }
    CHECK(semisimple_ext_oracle(sphere(0), sphere(1), 1) == 1);
    CHECK(semisimple_ext_oracle(direct_sum(sphere(0), sphere(0)), sphere(0), 0) == 2);
}

TEST_CASE("Ext agrees with the product of cohomology dimensions")
{
    Rng rng(10, 0);
    for (int k = 0; k < 40; ++k) {
        const Complex m = random_complex(rng, Shape{3, -2, 2}), n = random_complex(rng, Shape{3, -2, 2});
        for (int i = -5; i <= 5; ++i) {
            std::size_t expected = 0;
            for (int a = -3; a <= 3; ++a)
                expected += h_dim(m, a) * h_dim(n, a + i);
            CHECK(ext_dim(m, n, i) == expected);
            CHECK(semisimple_ext_oracle(m, n, i) == expected);
        }
    }
}

TEST_CASE("good truncation")
{
    CHECK(truncate_nonneg(sphere(1)).is_zero());
    CHECK(truncate_nonneg(sphere(0)) == sphere(0));
    // Chain degrees 0 and -1 with boundary [1 0]: only the 0-cycles survive, in chain degree 0.
    const Complex c = cx({{0, 2}, {1, 1}}, {{0, M({{1, 0}})}});
    const Complex t = truncate_nonneg(c);
    CHECK(t.dims() == std::map<int, std::size_t>{{0, 1}});

    Rng rng(11, 0);
    for (int k = 0; k < 30; ++k) {
        const Complex x = random_complex(rng, Shape{3, -3, 3});
        const Complex tx = truncate_nonneg(x);
        CHECK(tx.hi() <= 0);
        for (int n = -4; n <= 0; ++n)
            CHECK(cohomology_dim(tx, n) == h_dim(x, n));
        for (int n = 1; n <= 4; ++n)
            CHECK(tx.dim(n) == 0);
    }
}

TEST_CASE("random complexes")
{
    CHECK(random_complex(1, 0, -3, 3).is_zero());
    CHECK(random_complex(7, 3, -2, 2) == random_complex(7, 3, -2, 2));
    const Complex c = random_complex(7, 3, -2, 2);
    CHECK(c.lo() >= -2);
    CHECK(c.hi() <= 2);
    for (int n = -2; n <= 2; ++n)
        CHECK(c.dim(n) <= 3);
    Rng rng(2, 0);
    for (int k = 0; k < 20; ++k)
        CHECK(is_acyclic(random_acyclic(rng, Shape{})));
}
