#pragma once

#include "fdg/complex.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fdg {

// Class predicates of the projective model structure on bounded complexes over Q.

/// Degreewise surjection.
bool is_fibration(const ChainMap& p);
/// Degreewise surjection whose kernel subcomplex is acyclic.
bool is_trivial_fibration(const ChainMap& p);
/// Degreewise injection (every bounded complex over a field is cofibrant).
bool is_cofibration(const ChainMap& i);
/// Degreewise injection whose cokernel is acyclic.
bool is_trivial_cofibration(const ChainMap& i);

/// A commuting square  f : M -> X,  g : N -> Y  over  i : M -> N,  p : X -> Y.
struct Square {
    ChainMap f;
    ChainMap g;
};

/// Some h : N -> X with h i = f and p h = g, or nothing if no lift exists.  Solved as one exact
/// linear system in the entries of every h^n.  Throws NonCommutingSquare when g i != p f.
std::optional<ChainMap> lift_square(const ChainMap& i, const ChainMap& p, const ChainMap& f, const ChainMap& g);

/// Same as lift_square for many squares over one (i, p), sharing a single elimination.
std::vector<std::optional<ChainMap>> lift_squares(const ChainMap& i, const ChainMap& p,
                                                  const std::vector<Square>& squares);

/// Basis of the space of chain maps m -> n.
std::vector<ChainMap> chain_maps_basis(const Complex& m, const Complex& n);

/// Basis of the vector space of commuting squares over (i, p).
std::vector<Square> commuting_squares_basis(const ChainMap& i, const ChainMap& p);

/// Degree -1 maps h(n) : K^n -> K^{n-1} with d h + h d = id, keyed by n.  Throws NotAcyclic.
std::map<int, Matrix> contracting_homotopy(const Complex& k);
/// Checks d^{n-1} h^n + h^{n+1} d^n = id in every degree.
bool is_contracting_homotopy(const Complex& k, const std::map<int, Matrix>& h);

/// M -> M (+) P(N) -> N, where P(N) is the sum of disks D(n, dim N^n) mapping onto N by evaluation.
std::pair<ChainMap, ChainMap> factor_trivcof_fib(const ChainMap& f);
/// M -> Cyl(f) -> N through the mapping cylinder Cyl(f)^n = M^n (+) M^{n+1} (+) N^n.
std::pair<ChainMap, ChainMap> factor_cof_trivfib(const ChainMap& f);
/// The disk complex P(N) together with its evaluation map onto N.
ChainMap disk_cover(const Complex& n);

/// Precomposition theta^* : HOM(B, c) -> HOM(A, c) as a map of stored HOM complexes.
ChainMap precomposition(const ChainMap& theta, const Complex& c);
/// dim H^2 of cone(theta^* : HOM(B, c) -> HOM(A, c)).
std::size_t obstruction_group(const ChainMap& theta, const Complex& c);

/// Degrees n for which the generator D(n) can meet either complex.
std::pair<int, int> generator_range(const Complex& a, const Complex& b);

/// True iff every square over 0 -> D(n) lifts against p, for n in generator_range.
bool lifts_against_disk_generators(const ChainMap& p);
/// True iff every square over S(n+1) -> D(n) lifts against p, for n in generator_range.
bool lifts_against_boundary_generators(const ChainMap& p);

/// The generating maps 0 -> D(n) and S(n+1) -> D(n).
ChainMap disk_generator(int n);
ChainMap boundary_generator(int n);

} // namespace fdg
