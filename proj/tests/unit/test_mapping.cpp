#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "fdg/generators.hpp"
#include "fdg/hom.hpp"
#include "fdg/mapping_space.hpp"

using namespace fdg;
using testing::h_dim;

TEST_CASE("mapping space examples")
{
    const SimplicialVS point = mapping_space(sphere(0), Complex{}, 3);
    CHECK(point.dims() == std::vector<std::size_t>{0, 0, 0, 0});

    const SimplicialVS s = mapping_space(sphere(0), sphere(0), 2);
    CHECK(s.dim(0) == 1);
    CHECK(s.dims() == std::vector<std::size_t>{1, 1, 1});
    CHECK(check_simplicial_identities(s));

    CHECK(pi_dim(sphere(0), sphere(0), 0) == 1);
    CHECK(pi_dim(sphere(0), sphere(0), 1) == 0);
    CHECK(pi_dim(sphere(0), shift(sphere(1), 1), 0) == 1);
    for (int n = -1; n <= 1; ++n)
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(pi_dim(disk(0), sphere(n), i) == 0);
            CHECK(pi_dim(sphere(n), disk(0), i) == 0);
        }
}

TEST_CASE("level dimensions follow the binomial formula")
{
    // HOM(S(0), S(0) + S(-1) + S(-2)) has one cocycle in each of chain degrees 0, 1, 2.
    const Complex n = direct_sum(sphere(0), direct_sum(sphere(-1), sphere(-2)));
    const SimplicialVS s = mapping_space(sphere(0), n, 4);
    CHECK(s.dims() == std::vector<std::size_t>{1, 2, 4, 7, 11});
    CHECK(check_simplicial_identities(s));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(pi_dim(sphere(0), n, i) == 1);
}

TEST_CASE("homotopy groups are cohomology of HOM")
{
    Rng rng(42, 0);
    const Shape shape{2, -2, 2};
    for (int k = 0; k < 30; ++k) {
        const Complex m = random_complex(rng, shape), n = random_complex(rng, shape);
        const Complex h = hom_complex(m, n);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(pi_dim(m, n, i) == h_dim(h, -static_cast<int>(i)));
            for (int sh = -1; sh <= 2; ++sh)
                CHECK(pi_dim(m, shift(n, sh), i) == ext_dim(m, n, sh - static_cast<int>(i)));
        }
        const SimplicialVS s = mapping_space(m, n, 3);
        CHECK(check_simplicial_identities(s));
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(homotopy_dim(s, i) == pi_dim(m, n, i));
    }
}

TEST_CASE("filtered mapping spaces")
{
    Rng rng(43, 0);
    for (int k = 0; k < 15; ++k) {
        const FilteredComplex m = random_filtered(rng, Shape{1, -1, 1}, 1 + k % 2);
        const FilteredComplex n = random_filtered(rng, Shape{1, -1, 1}, 1 + k % 2);
        const Complex h = filtered_hom_complex(m, n);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(pi_dim(m, n, i) == h_dim(h, -static_cast<int>(i)));
        CHECK(check_simplicial_identities(mapping_space(m, n, 2)));
    }
}
