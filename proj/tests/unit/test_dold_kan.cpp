#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "fdg/dold_kan.hpp"
#include "fdg/errors.hpp"
#include "fdg/generators.hpp"
#include "fdg/hom.hpp"

#include <algorithm>
#include <stdexcept>

using namespace fdg;
using testing::M;

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::vector<std::size_t> row{1};
    for (std::size_t r = 1; r <= n; ++r) {
        std::vector<std::size_t> next(r + 1, 1);
        for (std::size_t j = 1; j < r; ++j)
            next[j] = row[j - 1] + row[j];
        row = next;
    }
    return k <= n ? row[k] : 0;
}

// Brute force: every non-decreasing list of length n+1 over 0..p hitting every value.
std::size_t count_surjections(std::size_t n, std::size_t p)
{
    std::size_t count = 0;
    std::vector<std::size_t> v(n + 1, 0);
    while (true) {
        std::vector<bool> hit(p + 1, false);
        for (auto x : v)
            hit[x] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
            ++count;
        std::size_t k = n + 1;
        while (k > 0 && v[k - 1] == p)
            --k;
        if (k == 0)
            break;
        const std::size_t next = v[k - 1] + 1;
        for (std::size_t j = k - 1; j <= n; ++j)
            v[j] = next;
    }
    return count;
}

Complex line_in_chain_degree(int n) { return from_chain({{n, 1}}, {}); }

} // namespace

TEST_CASE("monotone maps")
{
    CHECK_THROWS_AS(MonotoneMap(1, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(MonotoneMap(1, {0, 2}), std::invalid_argument);
    const MonotoneMap a(2, {0, 0, 2});
    CHECK_FALSE(a.is_surjective());
    CHECK_FALSE(a.is_injective());
    CHECK(MonotoneMap::identity(3).is_surjective());
    CHECK(MonotoneMap::identity(3).is_injective());
    CHECK(coface(2, 1).values() == std::vector<std::size_t>{0, 2});
    CHECK(codegeneracy(1, 0).values() == std::vector<std::size_t>{0, 0, 1});
    CHECK(compose(codegeneracy(1, 0), coface(2, 0)) == MonotoneMap::identity(1));
}

TEST_CASE("surjections")
{
    CHECK(surjections(3, 1).size() == 3);
    CHECK(surjections(1, 2).empty());
    for (std::size_t n = 0; n < 5; ++n) {
        REQUIRE(surjections(n, n).size() == 1);
        CHECK(surjections(n, n)[0] == MonotoneMap::identity(n));
    }
    for (std::size_t n = 0; n < 6; ++n)
        for (std::size_t p = 0; p <= n; ++p) {
            const auto all = surjections(n, p);
            CHECK(all.size() == binomial(n, p));
            CHECK(all.size() == count_surjections(n, p));
            CHECK(std::is_sorted(all.begin(), all.end(),
                                 [](const MonotoneMap& x, const MonotoneMap& y) { return x.values() < y.values(); }));
            for (const auto& s : all)
                CHECK(s.is_surjective());
        }
}

TEST_CASE("epi-monic factorization")
{
    const auto [e, m] = epi_monic_factorization(MonotoneMap::identity(2));
    CHECK(e == MonotoneMap::identity(2));
    CHECK(m == MonotoneMap::identity(2));

    const auto [e2, m2] = epi_monic_factorization(MonotoneMap(2, {0, 0, 2}));
    CHECK(e2 == MonotoneMap(1, {0, 0, 1}));
    CHECK(m2 == MonotoneMap(2, {0, 2}));

    const auto [e3, m3] = epi_monic_factorization(MonotoneMap(1, {0, 0}));
    CHECK(e3 == MonotoneMap(0, {0, 0}));
    CHECK(m3 == MonotoneMap(1, {0}));

    // Every monotone map out of [3] into [3].
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = a; b <= 3; ++b)
            for (std::size_t c = b; c <= 3; ++c)
                for (std::size_t d = c; d <= 3; ++d) {
                    const MonotoneMap alpha(3, {a, b, c, d});
                    const auto [epi, mono] = epi_monic_factorization(alpha);
                    CHECK(epi.is_surjective());
                    CHECK(mono.is_injective());
                    CHECK(compose(mono, epi) == alpha);
                }
}

TEST_CASE("denormalize examples")
{
    const SimplicialVS k = denormalize(line_in_chain_degree(1), 3);
    CHECK(k.dims() == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(check_simplicial_identities(k));

    const SimplicialVS z = denormalize(Complex{}, 3);
    CHECK(z.dims() == std::vector<std::size_t>{0, 0, 0, 0});

    // The constant simplicial object on Q: every face and degeneracy is the identity.
    const SimplicialVS c = denormalize(line_in_chain_degree(0), 3);
    CHECK(c.dims() == std::vector<std::size_t>{1, 1, 1, 1});
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            CHECK(c.face(n, i) == M({{1}}));
    for (std::size_t n = 0; n < 3; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            CHECK(c.degeneracy(n, j) == M({{1}}));
    CHECK(normalize(c) == line_in_chain_degree(0));

    CHECK_THROWS_AS(denormalize(line_in_chain_degree(-1), 2), NegativeSupport);
}

TEST_CASE("normalize examples")
{
    const Complex n = normalize(denormalize(line_in_chain_degree(1), 3));
    CHECK(n.dim(-1) == 1);
    CHECK(n.dim(0) == 0);
    CHECK(n.dim(-2) == 0);
    CHECK(n.dim(-3) == 0);
}

TEST_CASE("broken simplicial identities are detected")
{
    SimplicialVS c = denormalize(line_in_chain_degree(0), 2);
    std::vector<std::vector<Matrix>> faces{{M({{1}}), M({{1}})}, {M({{1}}), M({{1}}), M({{2}})}};
    std::vector<std::vector<Matrix>> degens{{M({{1}})}, {M({{1}}), M({{1}})}};
    CHECK_FALSE(check_simplicial_identities(SimplicialVS(c.dims(), faces, degens)));
    faces[1][2] = M({{1}});
    CHECK(check_simplicial_identities(SimplicialVS(c.dims(), faces, degens)));
}

TEST_CASE("Dold-Kan round trip on random chain complexes")
{
    Rng rng(42, 0);
    for (int k = 0; k < 40; ++k) {
        const std::size_t top = k % 4;
        const Complex v = random_chain_complex(rng, 3, top);
        const std::size_t L = top + 2;
        const SimplicialVS s = denormalize(v, L);
        CHECK(check_simplicial_identities(s));
        for (std::size_t n = 0; n <= L; ++n) {
            std::size_t expected = 0;
            for (std::size_t p = 0; p <= n; ++p)
                expected += binomial(n, p) * chain_dim(v, static_cast<int>(p));
            CHECK(s.dim(n) == expected);
            CHECK(denormalized_dim(v, n) == expected);
        }
        const Complex back = normalize(s);
        for (int n = 0; n < static_cast<int>(L); ++n)
            CHECK(chain_dim(back, n) == chain_dim(v, n));
        CHECK(is_isomorphic(back, v));
    }
}
