#pragma once

// JSON forms of the domain types.  Rationals are strings "p" or "p/q"; matrices are arrays of rows;
// degree-keyed tables use decimal degree strings in increasing numeric order.

#include "fdg/complex.hpp"
#include "fdg/dold_kan.hpp"
#include "fdg/filtered.hpp"
#include "fdg/graded.hpp"
#include "fdg/grassmann.hpp"
#include "fdg/model.hpp"

#include "json.hpp"

#include <string>

namespace fdg {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Json matrix_to_json(const Matrix& m);
/// Expects `rows` x `cols`; throws SchemaError at `path`.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path = "");

/// {"degrees": {"n": dim}, "d": {"n": matrix}}: only nonzero dimensions and nonempty differentials.
Json to_json(const Complex& c);
Complex complex_from_json(const Json& j, const std::string& path = "");

/// {"source", "target", "f": {"n": matrix}}.
Json to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j, const std::string& path = "");
/// Only the "f" table; source and target are supplied by the caller.
Json components_to_json(const ChainMap& f);
ChainMap components_from_json(const Json& j, const Complex& source, const Complex& target,
                              const std::string& path = "");

/// {"length", "levels": [N+1 complexes], "inclusions": [{"f"}...]}.
Json to_json(const FilteredComplex& m);
FilteredComplex filtered_from_json(const Json& j, const std::string& path = "");
/// {"source", "target", "levels": [{"f"}...]}.
Json to_json(const FilteredMap& f);
FilteredMap filtered_map_from_json(const Json& j, const std::string& path = "");

/// {"top_weight", "components": [...], "t_maps": [{"f"}...]}.
Json to_json(const GradedModuleComplex& g);
GradedModuleComplex graded_from_json(const Json& j, const std::string& path = "");

/// {"V", "U", "W", "incl": {"f"}, "phi": {"f"}}.
Json to_json(const GrassPoint& p);
GrassPoint grass_point_from_json(const Json& j, const std::string& path = "");
/// {"V", "W": filtered, "phi": {"f"}}.
Json to_json(const FlagPoint& p);
FlagPoint flag_point_from_json(const Json& j, const std::string& path = "");

/// A lifting problem {"i": map, "p": map, "f": {"f"}, "g": {"f"}}.
struct LiftingProblem {
    ChainMap i;
    ChainMap p;
    ChainMap f;
    ChainMap g;
};
Json to_json(const LiftingProblem& s);
LiftingProblem lifting_problem_from_json(const Json& j, const std::string& path = "");

Json to_json(const Shadow& s);
/// Level dimensions plus every face and degeneracy matrix.
Json to_json(const SimplicialVS& s);

/// Parses text, converting nlohmann parse errors to SchemaError.
Json parse_json_text(const std::string& text);

} // namespace fdg
