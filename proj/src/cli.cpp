#include "fdg/cli.hpp"

#include "fdg/errors.hpp"
#include "fdg/graded.hpp"
#include "fdg/grassmann.hpp"
#include "fdg/hom.hpp"
#include "fdg/mapping_space.hpp"
#include "fdg/model.hpp"
#include "fdg/serialize.hpp"
#include "fdg/suites.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace fdg {

namespace {

/// Failure while reading an input file; reported like a domain error.
class InputError : public Error {
public:
    using Error::Error;
};

struct Context {
    std::istream& in;
    std::ostream& out;
    bool stdin_used = false;
};

Json read_input(Context& ctx, const std::string& path)
{
    std::stringstream buffer;
    if (path == "-") {
        if (ctx.stdin_used)
            throw InputError("standard input can only be read once");
        ctx.stdin_used = true;
        buffer << ctx.in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file)
            throw InputError("cannot read '" + path + "'");
        buffer << file.rdbuf();
    }
    return parse_json_text(buffer.str());
}

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("/") + key, "missing field");
    return j.at(key);
}

/// Filtered objects are recognised by their "length" field.
bool is_filtered_complex_json(const Json& j)
{
    return j.is_object() && j.contains("length");
}

Json dims_table(const Complex& c)
{
    Json out = Json::object();
    for (int n = c.lo(); n <= c.hi(); ++n)
        out[std::to_string(n)] = cohomology_dim(c, n);
    return out;
}

Json simplicial_summary(const SimplicialVS& s)
{
    Json pi = Json::object();
    for (std::size_t i = 0; i < s.top_level(); ++i)
        pi[std::to_string(i)] = homotopy_dim(s, i);
    return Json{{"levels", s.top_level()}, {"dims", s.dims()}, {"pi", std::move(pi)}};
}

Json validation_json(const Validation& v)
{
    return Json{{"valid", v.valid}, {"problems", v.problems}};
}

using Action = std::function<int(Context&)>;

void emit(Context& ctx, const Json& j)
{
    ctx.out << j.dump() << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with filtered and graded complexes over the rationals", "fdg"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Action action;
    std::string file, file2, kind = "trivcof-fib", suite, type;
    int ext_i = 0;
    std::size_t levels = 0, count = 0;
    std::uint64_t seed = 0;
    bool full = false, list = false;

    auto input = [&](CLI::App* sub, std::string& target, const char* name, const char* what) {
        sub->add_option(name, target, what)->required();
    };

    {
        auto* sub = app.add_subcommand("cohomology", "Cohomology dimensions of a complex");
        input(sub, file, "file", "Complex JSON, or - for stdin");
        sub->callback([&] {
            action = [&](Context& ctx) {
                emit(ctx, Json{{"H", dims_table(complex_from_json(read_input(ctx, file)))}});
                return int(exit_ok);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("ext", "dim Ext^i(M, N) for complexes or filtered complexes");
        auto* opt_i = sub->add_option("--i", ext_i, "Degree i; omitted: every degree where HOM is nonzero");
        input(sub, file, "m", "Source JSON");
        input(sub, file2, "n", "Target JSON");
        sub->callback([&, opt_i] {
            action = [&, opt_i](Context& ctx) {
                const Json mj = read_input(ctx, file), nj = read_input(ctx, file2);
                if (is_filtered_complex_json(mj) != is_filtered_complex_json(nj))
                    throw SchemaError("/", "both inputs must be filtered or both plain");
                Complex hom;
                if (is_filtered_complex_json(mj))
                    hom = filtered_hom_complex(filtered_from_json(mj), filtered_from_json(nj));
                else
                    hom = hom_complex(complex_from_json(mj), complex_from_json(nj));
                if (opt_i->count() > 0)
                    emit(ctx, Json{{"dim", cohomology_dim(hom, ext_i)}});
                else
                    emit(ctx, Json{{"ext", dims_table(hom)}});
                return int(exit_ok);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("map-space", "Level dimensions and homotopy of the mapping space {\"m\",\"n\"}");
        sub->add_option("--levels", levels, "Top simplicial level; pi_i is reported for i below it")->default_val(3);
        input(sub, file, "file", "{\"m\": ..., \"n\": ...} with plain or filtered complexes");
        sub->callback([&] {
            action = [&](Context& ctx) {
                const Json j = read_input(ctx, file);
                const Json& mj = member(j, "m");
                const Json& nj = member(j, "n");
                SimplicialVS s;
                if (is_filtered_complex_json(mj))
                    s = mapping_space(filtered_from_json(mj, "/m"), filtered_from_json(nj, "/n"), levels);
                else
                    s = mapping_space(complex_from_json(mj, "/m"), complex_from_json(nj, "/n"), levels);
                emit(ctx, simplicial_summary(s));
                return int(exit_ok);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("model-check", "Every model-structure predicate on a map");
        input(sub, file, "file", "Chain map or filtered map JSON");
        sub->callback([&] {
            action = [&](Context& ctx) {
                const Json j = read_input(ctx, file);
                if (is_filtered_complex_json(member(j, "source"))) {
                    const FilteredMap f = filtered_map_from_json(j);
                    emit(ctx, Json{{"fibration", is_filtered_fibration(f)},
                                   {"trivial_fibration", is_filtered_trivial_fibration(f)},
                                   {"weak_equivalence", is_filtered_weak_equivalence(f)},
                                   {"lifts_against_disk_generators", filtered_lifts_against_disk_generators(f)},
                                   {"lifts_against_boundary_generators",
                                    filtered_lifts_against_boundary_generators(f)}});
                } else {
                    const ChainMap f = chain_map_from_json(j);
                    emit(ctx, Json{{"fibration", is_fibration(f)},
                                   {"trivial_fibration", is_trivial_fibration(f)},
                                   {"cofibration", is_cofibration(f)},
                                   {"trivial_cofibration", is_trivial_cofibration(f)},
                                   {"quasi_isomorphism", is_quasi_iso(f)},
                                   {"lifts_against_disk_generators", lifts_against_disk_generators(f)},
                                   {"lifts_against_boundary_generators", lifts_against_boundary_generators(f)}});
                }
                return int(exit_ok);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("lift", "Solve a lifting problem {\"i\",\"p\",\"f\",\"g\"}");
        input(sub, file, "file", "Lifting problem JSON");
        sub->callback([&] {
            action = [&](Context& ctx) {
                const LiftingProblem s = lifting_problem_from_json(read_input(ctx, file));
                const auto h = lift_square(s.i, s.p, s.f, s.g);
                emit(ctx, Json{{"exists", h.has_value()}, {"lift", h ? components_to_json(*h) : Json(nullptr)}});
                return int(exit_ok);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("factor", "Factor a chain map through the model structure");
        sub->add_option("--kind", kind, "trivcof-fib or cof-trivfib")
            ->check(CLI::IsMember({"trivcof-fib", "cof-trivfib"}))
            ->default_val("trivcof-fib");
        input(sub, file, "file", "Chain map JSON");
        sub->callback([&] {
            action = [&](Context& ctx) {
                const ChainMap f = chain_map_from_json(read_input(ctx, file));
                const auto [first, second] = kind == "trivcof-fib" ? factor_trivcof_fib(f) : factor_cof_trivfib(f);
                emit(ctx, Json{{"first", to_json(first)}, {"second", to_json(second)}});
                return int(exit_ok);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("rees", "Rees module of a filtered complex");
        input(sub, file, "file", "Filtered complex JSON");
        sub->callback([&] {
            action = [&](Context& ctx) {
                emit(ctx, to_json(rees(filtered_from_json(read_input(ctx, file)))));
                return int(exit_ok);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("phi", "Filtered complex of a graded module");
        input(sub, file, "file", "Graded module JSON");
        sub->callback([&] {
            action = [&](Context& ctx) {
                emit(ctx, to_json(phi(graded_from_json(read_input(ctx, file)))));
                return int(exit_ok);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("rees-audit", "Check the Rees properties on a filtered complex or map");
        input(sub, file, "file", "Filtered complex or filtered map JSON");
        sub->callback([&] {
            action = [&](Context& ctx) {
                const Json j = read_input(ctx, file);
                Json report = Json::object();
                if (is_filtered_complex_json(j)) {
                    const FilteredComplex x = filtered_from_json(j);
                    const GradedModuleComplex r = rees(x);
                    report["phi_rees_identity"] = phi(r) == x;
                    report["torsion_free"] = is_torsion_free(r);
                    report["unit_isomorphism"] = is_graded_isomorphism(unit_comparison(r));
                } else {
                    const FilteredMap f = filtered_map_from_json(j);
                    const GradedMap r = rees(f);
                    bool weightwise = true;
                    for (std::size_t w = 0; w < r.weight_count(); ++w)
                        weightwise = weightwise && r.weight(w) == f.level(w);
                    report["weightwise_identity"] = weightwise;
                    report["fibration_preserved"] = rees_fibration_audit(f);
                    report["weak_equivalence_matches"] =
                        is_filtered_weak_equivalence(f) == graded_is_weak_equivalence(r);
                }
                bool passed = true;
                for (const auto& [key, value] : report.items())
                    passed = passed && value.get<bool>();
                report["passed"] = passed;
                emit(ctx, report);
                return int(passed ? exit_ok : exit_property_failure);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("dold-kan", "Denormalize a non-negative chain complex and normalize back");
        auto* opt_levels = sub->add_option("--levels", levels, "Top level L; default: top degree + 2");
        sub->add_flag("--full", full, "Include every face and degeneracy matrix");
        input(sub, file, "file", "Complex JSON with chain degree n stored at degree -n");
        sub->callback([&, opt_levels] {
            action = [&, opt_levels](Context& ctx) {
                const Complex v = complex_from_json(read_input(ctx, file));
                const std::size_t top = v.is_zero() ? 0 : static_cast<std::size_t>(std::max(0, -v.lo()));
                const std::size_t L = opt_levels->count() > 0 ? levels : top + 2;
                const SimplicialVS s = denormalize(v, L);
                Json report{{"levels", L},
                            {"dims", s.dims()},
                            {"identities", check_simplicial_identities(s)},
                            {"normalized", to_json(normalize(s))}};
                if (full)
                    report["simplicial"] = to_json(s);
                emit(ctx, report);
                return int(exit_ok);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("grass-shadow", "Validate a Grassmannian point and compute its shadow");
        input(sub, file, "file", "Grassmannian point JSON");
        sub->callback([&] {
            action = [&](Context& ctx) {
                const GrassPoint p = grass_point_from_json(read_input(ctx, file));
                const Validation v = validate_grass_point(p);
                Json report = validation_json(v);
                if (v.valid)
                    report["shadow"] = to_json(shadow_grass(p));
                emit(ctx, report);
                return int(v.valid ? exit_ok : exit_domain_error);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("flag-shadow", "Validate a flag point and compute its nested shadows");
        input(sub, file, "file", "Flag point JSON");
        sub->callback([&] {
            action = [&](Context& ctx) {
                const FlagPoint p = flag_point_from_json(read_input(ctx, file));
                const Validation v = validate_flag_point(p);
                Json report = validation_json(v);
                if (v.valid) {
                    Json shadows = Json::array();
                    for (const auto& s : shadow_flag(p))
                        shadows.push_back(to_json(s));
                    report["shadows"] = std::move(shadows);
                }
                emit(ctx, report);
                return int(v.valid ? exit_ok : exit_domain_error);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("harness", "Run a seeded property suite");
        sub->add_option("--suite", suite, "Suite name");
        sub->add_option("--seed", seed, "Seed")->default_val(0);
        sub->add_option("--count", count, "Number of instances")->default_val(100);
        sub->add_flag("--list", list, "List the suites");
        sub->callback([&] {
            action = [&](Context& ctx) {
                if (list) {
                    emit(ctx, Json{{"suites", suite_names()}});
                    return int(exit_ok);
                }
                if (suite.empty())
                    throw CLI::RequiredError("--suite");
                const SuiteReport r = run_suite(suite, seed, count);
                emit(ctx, to_json(r));
                return int(r.passed() ? exit_ok : exit_property_failure);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("canon", "Parse a document and re-emit it in canonical form");
        sub->add_option("--type", type, "Document type")
            ->required()
            ->check(CLI::IsMember(
                {"complex", "map", "filtered", "filtered-map", "graded", "grass-point", "flag-point", "lifting"}));
        input(sub, file, "file", "JSON document");
        sub->callback([&] {
            action = [&](Context& ctx) {
                const Json j = read_input(ctx, file);
                Json canonical;
                if (type == "complex")
                    canonical = to_json(complex_from_json(j));
                else if (type == "map")
                    canonical = to_json(chain_map_from_json(j));
                else if (type == "filtered")
                    canonical = to_json(filtered_from_json(j));
                else if (type == "filtered-map")
                    canonical = to_json(filtered_map_from_json(j));
                else if (type == "graded")
                    canonical = to_json(graded_from_json(j));
                else if (type == "grass-point")
                    canonical = to_json(grass_point_from_json(j));
                else if (type == "flag-point")
                    canonical = to_json(flag_point_from_json(j));
                else
                    canonical = to_json(lifting_problem_from_json(j));
                emit(ctx, canonical);
                return int(exit_ok);
            };
        });
    }

    Context ctx{in, out};
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return action(ctx);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << "run 'fdg --help' for usage\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return exit_domain_error;
    }
}

} // namespace fdg
