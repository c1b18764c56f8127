#include "fdg/mapping_space.hpp"

#include "fdg/errors.hpp"
#include "fdg/hom.hpp"

namespace fdg {

SimplicialVS mapping_space(const Complex& m, const Complex& n, std::size_t L)
{
    return denormalize(truncate_nonneg(hom_complex(m, n)), L);
}

SimplicialVS mapping_space(const FilteredComplex& m, const FilteredComplex& n, std::size_t L)
{
    return denormalize(truncate_nonneg(filtered_hom_complex(m, n)), L);
}

std::size_t homotopy_dim(const SimplicialVS& s, std::size_t i)
{
    if (i >= s.top_level())
        throw ShapeMismatch("homotopy_dim: level " + std::to_string(i) + " needs a simplicial object above it");
    return cohomology_dim(normalize(s), -static_cast<int>(i));
}

// Level i + 1 is the last one H_i depends on.
std::size_t pi_dim(const Complex& m, const Complex& n, std::size_t i)
{
    return homotopy_dim(mapping_space(m, n, i + 1), i);
}

std::size_t pi_dim(const FilteredComplex& m, const FilteredComplex& n, std::size_t i)
{
    return homotopy_dim(mapping_space(m, n, i + 1), i);
}

} // namespace fdg
