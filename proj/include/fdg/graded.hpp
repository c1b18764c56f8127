#pragma once

#include "fdg/complex.hpp"
#include "fdg/filtered.hpp"

#include <cstddef>
#include <vector>

namespace fdg {

/// Weight-graded Q[t]-module in complexes, stored weightwise.
///
/// Weights 0..W hold explicit complexes; t_map(w) : component(w) -> component(w-1) for w in 1..W.
/// Below weight 0 every component equals component(0) with identity t-maps; above W they vanish.
class GradedModuleComplex {
public:
    GradedModuleComplex() = default;
    /// components[w] for w = 0..W, t_maps[w-1] : components[w] -> components[w-1].  Throws NotAGradedModule.
    static GradedModuleComplex make(std::vector<Complex> components, std::vector<ChainMap> t_maps);

    std::size_t top_weight() const noexcept { return components_.empty() ? 0 : components_.size() - 1; }
    const Complex& component(int w) const;
    /// Out-of-band weights follow the tail rule (identity below 1, zero maps above W).
    ChainMap t_map(int w) const;
    const std::vector<Complex>& components() const noexcept { return components_; }
    const std::vector<ChainMap>& stored_t_maps() const noexcept { return t_maps_; }

    friend bool operator==(const GradedModuleComplex&, const GradedModuleComplex&) = default;

private:
    std::vector<Complex> components_;
    std::vector<ChainMap> t_maps_;
};

/// Weightwise chain maps f_w commuting with t.  Weights outside the stored band: f_w = f_0 below 0,
/// zero above.
class GradedMap {
public:
    GradedMap() = default;
    /// One chain map per weight 0..max(top weights).  Throws NotAChainMap.
    static GradedMap make(GradedModuleComplex source, GradedModuleComplex target, std::vector<ChainMap> weights);

    const GradedModuleComplex& source() const noexcept { return source_; }
    const GradedModuleComplex& target() const noexcept { return target_; }
    std::size_t weight_count() const noexcept { return weights_.size(); }
    const ChainMap& weight(std::size_t w) const { return weights_.at(w); }
    const std::vector<ChainMap>& weights() const noexcept { return weights_; }

    friend bool operator==(const GradedMap&, const GradedMap&) = default;

private:
    GradedModuleComplex source_;
    GradedModuleComplex target_;
    std::vector<ChainMap> weights_;
};

/// component(w) = F^w for w < N, t_map(w) = inclusion(w-1).
GradedModuleComplex rees(const FilteredComplex& m);
GradedMap rees(const FilteredMap& f);

/// Underlying complex component(0); F^w is the image of component(w) under the composite t-maps.
FilteredComplex phi(const GradedModuleComplex& g);

bool is_torsion_free(const GradedModuleComplex& g);

/// Canonical map g -> rees(phi(g)) (weight w: the corestriction of the composite t-map onto its image).
GradedMap unit_comparison(const GradedModuleComplex& g);
/// Every weight component is degreewise bijective.
bool is_graded_isomorphism(const GradedMap& f);

/// Basis of the weight-preserving chain maps g -> h commuting with t (including the tail weight).
std::vector<GradedMap> graded_hom_weight0(const GradedModuleComplex& g, const GradedModuleComplex& h);

bool graded_is_fibration(const GradedMap& f);
bool graded_is_weak_equivalence(const GradedMap& f);

/// is_filtered_fibration(p) implies graded_is_fibration(rees(p)).
bool rees_fibration_audit(const FilteredMap& p);

/// Weight-0 part of the t-commuting HOM complex (degree-k families on all weights, one explicit tail
/// weight below 0, commuting with t).
Complex graded_hom_complex(const GradedModuleComplex& g, const GradedModuleComplex& h);
std::size_t graded_ext_weight0_dim(const GradedModuleComplex& g, const GradedModuleComplex& h, int i);

} // namespace fdg
