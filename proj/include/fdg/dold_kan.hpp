#pragma once

#include "fdg/complex.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace fdg {

/// Order-preserving map [m] -> [n] of the simplex category, given by its values on 0..m.
class MonotoneMap {
public:
    MonotoneMap() = default;
    /// Throws std::invalid_argument unless values is non-decreasing with entries <= n.
    MonotoneMap(std::size_t n, std::vector<std::size_t> values);
    static MonotoneMap identity(std::size_t n);

    std::size_t source() const noexcept { return values_.empty() ? 0 : values_.size() - 1; }
    std::size_t target() const noexcept { return target_; }
    const std::vector<std::size_t>& values() const noexcept { return values_; }
    std::size_t operator()(std::size_t i) const { return values_.at(i); }

    bool is_surjective() const;
    bool is_injective() const;

    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
    friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;

private:
    std::size_t target_ = 0;
    std::vector<std::size_t> values_{0};
};

/// b o a.
MonotoneMap compose(const MonotoneMap& b, const MonotoneMap& a);

/// The coface [n-1] -> [n] missing i, and the codegeneracy [n+1] -> [n] hitting j twice.
MonotoneMap coface(std::size_t n, std::size_t i);
MonotoneMap codegeneracy(std::size_t n, std::size_t j);

/// All monotone surjections [n] -> [p], in lexicographic order of their value lists.
std::vector<MonotoneMap> surjections(std::size_t n, std::size_t p);

/// alpha = mono o epi with epi surjective and mono injective.
std::pair<MonotoneMap, MonotoneMap> epi_monic_factorization(const MonotoneMap& alpha);

/// Simplicial vector space truncated at level L: dims per level, faces d_i : X_n -> X_{n-1}
/// (n = 1..L, i = 0..n) and degeneracies s_j : X_n -> X_{n+1} (n = 0..L-1, j = 0..n).
class SimplicialVS {
public:
    SimplicialVS() = default;
    SimplicialVS(std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> faces,
                 std::vector<std::vector<Matrix>> degeneracies);

    std::size_t top_level() const noexcept { return dims_.empty() ? 0 : dims_.size() - 1; }
    std::size_t dim(std::size_t n) const { return dims_.at(n); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    /// d_i on level n (n >= 1).
    const Matrix& face(std::size_t n, std::size_t i) const { return faces_.at(n - 1).at(i); }
    /// s_j on level n (n < top_level()).
    const Matrix& degeneracy(std::size_t n, std::size_t j) const { return degeneracies_.at(n).at(j); }

    friend bool operator==(const SimplicialVS&, const SimplicialVS&) = default;

private:
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Matrix>> faces_;
    std::vector<std::vector<Matrix>> degeneracies_;
};

/// Every simplicial identity among faces and degeneracies up to the top level, as exact equations.
bool check_simplicial_identities(const SimplicialVS& s);

/// K(V) up to level L for a chain-indexed complex (chain degree n stored in cohomological degree -n).
/// Level n is the sum over surjections eta : [n] -> [p] of V_p, ordered by p then eta.
/// Throws NegativeSupport if V has negative chain degrees.
SimplicialVS denormalize(const Complex& v, std::size_t L);

/// N(X)_n = intersection of ker d_0 .. ker d_{n-1}, with differential (-1)^n d_n; chain-indexed output.
Complex normalize(const SimplicialVS& s);

/// Binomial level dimensions sum_p C(n, p) dim V_p.
std::size_t denormalized_dim(const Complex& v, std::size_t n);

} // namespace fdg
