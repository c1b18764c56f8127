#pragma once

#include "fdg/serialize.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

struct Fixture {
    std::string file;
    std::string type; ///< a `canon --type` value, or "pair" for {"m", "n"} inputs
};

inline const std::vector<Fixture>& fixtures()
{
    static const std::vector<Fixture> all{
        {"chain_two.json", "complex"},
        {"disk0.json", "complex"},
        {"mixed.json", "complex"},
        {"s0.json", "complex"},
        {"s1.json", "complex"},
        {"zero.json", "complex"},
        {"map_projection.json", "map"},
        {"map_s0_disk.json", "map"},
        {"filtered_disk.json", "filtered"},
        {"filtered_line.json", "filtered"},
        {"filtered_map_identity.json", "filtered-map"},
        {"graded_free.json", "graded"},
        {"graded_torsion.json", "graded"},
        {"grass_acyclic.json", "grass-point"},
        {"grass_line.json", "grass-point"},
        {"grass_noninjective.json", "grass-point"},
        {"flag_line.json", "flag-point"},
        {"lift_disk.json", "lifting"},
        {"pair_s0_s0.json", "pair"},
    };
    return all;
}

inline std::string fixture_path(const std::string& file)
{
    return std::string(FDG_FIXTURE_DIR) + "/" + file;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Parse into the typed object and emit again.
inline fdg::Json reemit(const std::string& type, const fdg::Json& j)
{
    using namespace fdg;
    if (type == "complex")
        return to_json(complex_from_json(j));
    if (type == "map")
        return to_json(chain_map_from_json(j));
    if (type == "filtered")
        return to_json(filtered_from_json(j));
    if (type == "filtered-map")
        return to_json(filtered_map_from_json(j));
    if (type == "graded")
        return to_json(graded_from_json(j));
    if (type == "grass-point")
        return to_json(grass_point_from_json(j));
    if (type == "flag-point")
        return to_json(flag_point_from_json(j));
    if (type == "lifting")
        return to_json(lifting_problem_from_json(j));
    return Json{{"m", to_json(complex_from_json(j.at("m")))}, {"n", to_json(complex_from_json(j.at("n")))}};
}

} // namespace testing
