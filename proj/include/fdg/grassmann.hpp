#pragma once

#include "fdg/complex.hpp"
#include "fdg/filtered.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fdg {

/// U -> W -> V with incl injective and phi a quasi-isomorphism.
struct GrassPoint {
    Complex V;
    Complex U;
    Complex W;
    ChainMap incl; ///< U -> W
    ChainMap phi;  ///< W -> V
};

/// Filtered W with a quasi-isomorphism W = F^0 W -> V.
struct FlagPoint {
    Complex V;
    FilteredComplex W;
    ChainMap phi;
};

struct Validation {
    bool valid = true;
    std::vector<std::string> problems;
};

/// Subspaces of H^i(V), in coordinates of the cohomology representatives of V.
struct Shadow {
    std::map<int, Matrix> basis; ///< canonical column basis per degree of H^*(V)
    std::map<int, std::size_t> dims;
    friend bool operator==(const Shadow&, const Shadow&) = default;
};

Validation validate_grass_point(const GrassPoint& p);
/// Image of H^i(U) in H^i(V) for every degree of V's support.  Throws InvalidPoint.
Shadow shadow_grass(const GrassPoint& p);

Validation validate_flag_point(const FlagPoint& p);
/// One shadow per filtration level 0..N-1, nested decreasingly.  Throws InvalidPoint.
std::vector<Shadow> shadow_flag(const FlagPoint& p);

/// Every subspace in `inner` lies in the matching subspace of `outer`.
bool shadow_contained(const Shadow& inner, const Shadow& outer);

} // namespace fdg
