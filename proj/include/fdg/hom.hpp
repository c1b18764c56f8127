#pragma once

#include "fdg/complex.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace fdg {

// Chain-indexed views.  A chain complex C_* is stored as the Complex with C^{-n} = C_n, so the
// boundary C_n -> C_{n-1} is d(-n).
inline std::size_t chain_dim(const Complex& c, int n) { return c.dim(-n); }
inline const Matrix& boundary(const Complex& c, int n) { return c.d(-n); }
/// Builds the stored form of a chain complex from chain dimensions and boundaries del_n : C_n -> C_{n-1}.
Complex from_chain(const std::map<int, std::size_t>& dims, const std::map<int, Matrix>& boundaries);

/// One block of a graded map family of cohomological degree k: a matrix target^{a+k} x source^a.
struct HomSlot {
    int source_degree;
    std::size_t offset;
    std::size_t rows;
    std::size_t cols;
};

std::vector<HomSlot> hom_slots(const Complex& m, const Complex& n, int k);
std::size_t hom_dim(const Complex& m, const Complex& n, int k);
/// Flattens / restores a family {a -> f_a : m^a -> n^{a+k}} in the layout of hom_slots.
Matrix pack_graded_map(const Complex& m, const Complex& n, int k, const std::map<int, Matrix>& family);
std::map<int, Matrix> unpack_graded_map(const Complex& m, const Complex& n, int k, const Matrix& flat);

/// delta(f) = d o f - (-1)^k f o d for a family of cohomological degree k (chain degree -k).
std::map<int, Matrix> hom_differential(const Complex& m, const Complex& n, int k,
                                       const std::map<int, Matrix>& family);

/// HOM(m, n) with HOM_j = Hom(m, n[-j]) stored in cohomological degree -j.  Its degree-0
/// cocycles are exactly the chain maps m -> n.
Complex hom_complex(const Complex& m, const Complex& n);

/// dim Ext^i(m, n): cohomology of hom_complex in cohomological degree i.
std::size_t ext_dim(const Complex& m, const Complex& n, int i);

/// Independent count over a field: sum_a dim H^a(m) * dim H^{a+i}(n).
std::size_t semisimple_ext_oracle(const Complex& m, const Complex& n, int i);

/// Good truncation tau_{>=0} of a chain-indexed complex: chain degrees >= 1 kept, chain degree 0
/// replaced by its cycles, negative chain degrees dropped.
Complex truncate_nonneg(const Complex& chain);

} // namespace fdg
