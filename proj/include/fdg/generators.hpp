#pragma once

#include "fdg/complex.hpp"
#include "fdg/filtered.hpp"
#include "fdg/graded.hpp"
#include "fdg/model.hpp"
#include "fdg/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <map>

namespace fdg {

/// Dimensions per degree are drawn from [0, max_dim] over the degree range [lo, hi].
struct Shape {
    std::size_t max_dim = 4;
    int lo = -3;
    int hi = 3;
};

/// Integer entries in [-bound, bound].
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 2);
/// Unit lower times unit upper triangular: always invertible.
Matrix random_invertible(Rng& rng, std::size_t n);
std::map<int, Matrix> random_isomorphism(Rng& rng, const Complex& c);

/// d^n = R * (annihilator of im d^{n-1}), so d^2 = 0 by construction.
Complex random_complex(Rng& rng, const Shape& shape);
Complex random_complex(std::uint64_t seed, std::size_t max_dim, int lo, int hi);
/// Sum of disks conjugated by a random isomorphism.
Complex random_acyclic(Rng& rng, const Shape& shape);
/// Chain degrees 0..top (stored in cohomological degrees -top..0).
Complex random_chain_complex(Rng& rng, std::size_t max_dim, std::size_t top);

/// Random combination of a basis of chain maps m -> n.
ChainMap random_chain_map(Rng& rng, const Complex& m, const Complex& n);
/// Inclusion of a random d-stable subspace (random vectors and their images under d).
ChainMap random_subcomplex(Rng& rng, const Complex& c);
/// Random degree-k cocycle of HOM(m, n) as a family of matrices m^a -> n^{a+k}.
std::map<int, Matrix> random_cocycle(Rng& rng, const Complex& m, const Complex& n, int k);

/// Surjection X -> Y with kernel isomorphic to K: X = Y (+) K twisted by a random cocycle, then
/// conjugated by a random isomorphism.  Trivial exactly when K is acyclic.
ChainMap random_fibration(Rng& rng, const Complex& y, const Complex& k);
/// Injection M -> N with cokernel isomorphic to C, built dually.
ChainMap random_cofibration(Rng& rng, const Complex& m, const Complex& c);
/// A quasi-isomorphism between random complexes, from trivial (co)fibrations and their composites.
ChainMap random_quasi_iso(Rng& rng, const Shape& shape);

Square random_square(Rng& rng, const ChainMap& i, const ChainMap& p);

FilteredComplex random_filtered(Rng& rng, const Shape& shape, std::size_t length);
FilteredComplex random_filtered(std::uint64_t seed, std::size_t max_dim, int lo, int hi, std::size_t length);
FilteredMap random_filtered_map(Rng& rng, const FilteredComplex& m, const FilteredComplex& n);
/// Levelwise surjection (Y (+) K) -> Y: the projection plus a random filtered map K -> Y on the second summand.
FilteredMap random_filtered_fibration(Rng& rng, const FilteredComplex& y, const FilteredComplex& k);
FilteredSquare random_filtered_square(Rng& rng, const FilteredMap& i, const FilteredMap& p);

/// Weights 0..top_weight.  Torsion-free instances use injective t-maps in a non-literal presentation;
/// otherwise t-maps are random chain maps (usually with kernel).
GradedModuleComplex random_graded(Rng& rng, const Shape& shape, std::size_t top_weight, bool torsion_free);

} // namespace fdg
