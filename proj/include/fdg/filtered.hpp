#pragma once

#include "fdg/complex.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fdg {

/// Decreasing filtration F^0 = M ⊇ F^1 ⊇ ... ⊇ F^N = 0, presented by injective chain maps
/// inclusion(k) : F^{k+1} -> F^k.  Levels past N are zero.
class FilteredComplex {
public:
    FilteredComplex() = default;
    /// `levels` lists F^0 .. F^N (so N = levels.size() - 1 >= 1 and the last level must be zero);
    /// `inclusions[k]` maps levels[k+1] into levels[k].  Throws NotAFiltration.
    static FilteredComplex make(std::vector<Complex> levels, std::vector<ChainMap> inclusions);
    /// F^0 = c, F^1 = 0.
    static FilteredComplex trivial(const Complex& c);

    std::size_t length() const noexcept { return inclusions_.size(); }
    const Complex& ambient() const { return level(0); }
    const Complex& level(std::size_t k) const;
    const ChainMap& inclusion(std::size_t k) const;
    const std::vector<Complex>& levels() const noexcept { return levels_; }

    /// Re-presents the same filtration with `length` levels (>= current length) by appending zeros.
    FilteredComplex padded(std::size_t length) const;

    friend bool operator==(const FilteredComplex&, const FilteredComplex&) = default;

private:
    std::vector<Complex> levels_;
    std::vector<ChainMap> inclusions_;
};

/// F^k = D(n) (or S(n)) for k <= p and 0 afterwards; length must exceed p.
FilteredComplex filtered_generator(GeneratorKind kind, int n, std::size_t p, std::size_t length);

/// Levelwise shift(., k).
FilteredComplex shift(const FilteredComplex& m, int k);

/// Composite inclusion F^k -> F^0.
ChainMap inclusion_into_ambient(const FilteredComplex& m, std::size_t k);

/// Levelwise chain maps f_k : F^k M -> F^k N with inclusion^N_k f_{k+1} = f_k inclusion^M_k.
class FilteredMap {
public:
    FilteredMap() = default;
    /// One chain map per level k < max(source.length(), target.length()).  Throws NotAChainMap when
    /// a level does not fit or the inclusion squares do not commute.
    static FilteredMap make(FilteredComplex source, FilteredComplex target, std::vector<ChainMap> levels);
    static FilteredMap identity(const FilteredComplex& m);
    static FilteredMap zero(FilteredComplex source, FilteredComplex target);

    const FilteredComplex& source() const noexcept { return source_; }
    const FilteredComplex& target() const noexcept { return target_; }
    std::size_t level_count() const noexcept { return levels_.size(); }
    /// Levels past level_count() are zero maps between zero complexes.
    const ChainMap& level(std::size_t k) const;
    const std::vector<ChainMap>& levels() const noexcept { return levels_; }

    friend bool operator==(const FilteredMap&, const FilteredMap&) = default;

private:
    FilteredComplex source_;
    FilteredComplex target_;
    std::vector<ChainMap> levels_;
};

FilteredMap compose(const FilteredMap& g, const FilteredMap& f);
FilteredMap direct_sum(const FilteredMap& a, const FilteredMap& b);
FilteredComplex direct_sum(const FilteredComplex& a, const FilteredComplex& b);

bool is_filtered_weak_equivalence(const FilteredMap& f);
bool is_filtered_fibration(const FilteredMap& f);
bool is_filtered_trivial_fibration(const FilteredMap& f);
/// Every level bounded (projective degreewise over Q) and the filtration reaches zero.
bool check_cofibrant_hypotheses(const FilteredComplex& m);

/// Filtered HOM complex: cohomological degree k holds the families of degree-k maps on every level
/// that commute with the inclusions; the differential is applied levelwise.
Complex filtered_hom_complex(const FilteredComplex& m, const FilteredComplex& n);
std::size_t filtered_ext_dim(const FilteredComplex& m, const FilteredComplex& n, int i);

/// Basis of the space of filtered maps m -> n.
std::vector<FilteredMap> filtered_maps_basis(const FilteredComplex& m, const FilteredComplex& n);

FilteredMap operator+(const FilteredMap& a, const FilteredMap& b);
FilteredMap operator*(const Rational& s, const FilteredMap& f);

struct FilteredSquare {
    FilteredMap f;
    FilteredMap g;
};

std::optional<FilteredMap> filtered_lift_square(const FilteredMap& i, const FilteredMap& p, const FilteredMap& f,
                                                const FilteredMap& g);
std::vector<std::optional<FilteredMap>> filtered_lift_squares(const FilteredMap& i, const FilteredMap& p,
                                                              const std::vector<FilteredSquare>& squares);
std::vector<FilteredSquare> filtered_commuting_squares_basis(const FilteredMap& i, const FilteredMap& p);

/// D(n, p) / S(n+1, p) generators as filtered maps 0 -> D(n,p) and S(n+1,p) -> D(n,p).
FilteredMap filtered_disk_generator(int n, std::size_t p, std::size_t length);
FilteredMap filtered_boundary_generator(int n, std::size_t p, std::size_t length);

/// Every square over 0 -> D(n, p) (resp. S(n+1, p) -> D(n, p)) lifts against p, for all n in the
/// support range and every p below the filtration length.
bool filtered_lifts_against_disk_generators(const FilteredMap& p);
bool filtered_lifts_against_boundary_generators(const FilteredMap& p);

} // namespace fdg
