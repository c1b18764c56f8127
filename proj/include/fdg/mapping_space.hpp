#pragma once

#include "fdg/complex.hpp"
#include "fdg/dold_kan.hpp"
#include "fdg/filtered.hpp"

#include <cstddef>

namespace fdg {

/// K(tau_{>=0} HOM(m, n)) up to level L.
SimplicialVS mapping_space(const Complex& m, const Complex& n, std::size_t L);
SimplicialVS mapping_space(const FilteredComplex& m, const FilteredComplex& n, std::size_t L);

/// dim pi_i of the mapping space, read off the normalization of its simplicial model.
std::size_t pi_dim(const Complex& m, const Complex& n, std::size_t i);
std::size_t pi_dim(const FilteredComplex& m, const FilteredComplex& n, std::size_t i);

/// pi_i of an arbitrary simplicial vector space: H_i of its normalization.  Needs i < top level.
std::size_t homotopy_dim(const SimplicialVS& s, std::size_t i);

} // namespace fdg
