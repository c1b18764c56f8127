// One PASS/FAIL line per acceptance criterion.  Exit status is the number of failed criteria.

#include "../common/fixtures.hpp"
#include "../unit/support.hpp"

#include "fdg/cli.hpp"
#include "fdg/dold_kan.hpp"
#include "fdg/errors.hpp"
#include "fdg/generators.hpp"
#include "fdg/grassmann.hpp"
#include "fdg/hom.hpp"
#include "fdg/mapping_space.hpp"
#include "fdg/suites.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace fdg;

namespace {

struct Criterion {
    std::vector<std::string> failures;
    void require(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
    void suite(const std::string& name, std::uint64_t seed, std::size_t count)
    {
        const SuiteReport r = run_suite(name, seed, count);
        std::size_t checked = 0;
        for (const auto& p : r.properties)
            checked += p.checked;
        require(r.count == count && checked > 0, name + ": nothing checked");
        for (const auto& p : r.properties)
            if (p.failures > 0)
                failures.push_back(name + ": " + p.name + " failed " + std::to_string(p.failures) + "/" +
                                   std::to_string(p.checked));
    }
};

int report(int id, const std::string& title, const std::function<void(Criterion&)>& body)
{
    Criterion c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << ' ' << id << ' ' << title << '\n';
    for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k)
        std::cout << "    " << c.failures[k] << '\n';
    std::cout.flush();
    return c.failures.empty() ? 0 : 1;
}

std::size_t product_formula(const Complex& m, const Complex& n, int i)
{
    std::size_t total = 0;
    for (int a = m.lo(); a <= m.hi(); ++a)
        total += testing::h_dim(m, a) * testing::h_dim(n, a + i);
    return total;
}

std::size_t pascal(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> t(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        t[r].assign(r + 1, 1);
        for (std::size_t j = 1; j < r; ++j)
            t[r][j] = t[r - 1][j - 1] + t[r - 1][j];
    }
    return k <= n ? t[n][k] : 0;
}

int run_cli_text(const std::vector<std::string>& args, std::string& out)
{
    std::istringstream in;
    std::ostringstream o, e;
    const int code = run_cli(args, in, o, e);
    out = o.str();
    return code;
}

} // namespace

int main()
{
    int failed = 0;

    failed += report(1, "model axioms on 200 instances", [](Criterion& c) { c.suite("model-axioms", 42, 200); });

    failed += report(2, "generator detection on 200 plain and 100 filtered instances", [](Criterion& c) {
        c.suite("generator-detection", 42, 200);
        c.suite("filtered-generator-detection", 42, 100);
    });

    failed += report(3, "Ext oracle and mapping-space crosswalk", [](Criterion& c) {
        c.suite("ext-oracle", 42, 200);
        for (std::uint64_t k = 0; k < 200; ++k) {
            Rng rng(7, k);
            const Complex m = random_complex(rng, Shape{4, -3, 3}), n = random_complex(rng, Shape{4, -3, 3});
            for (int i = -6; i <= 6; ++i)
                c.require(ext_dim(m, n, i) == product_formula(m, n, i),
                          "ext mismatch at instance " + std::to_string(k) + ", i = " + std::to_string(i));
        }
        for (std::uint64_t k = 0; k < 40; ++k) {
            Rng rng(8, k);
            const Complex m = random_complex(rng, Shape{2, -1, 1}), n = random_complex(rng, Shape{2, -1, 1});
            for (int s = -1; s <= 3; ++s)
                for (int i = 0; i <= 3; ++i)
                    c.require(pi_dim(m, shift(n, s), static_cast<std::size_t>(i)) == product_formula(m, n, s - i),
                              "crosswalk mismatch at instance " + std::to_string(k));
        }
    });

    failed += report(4, "Dold-Kan round trip on 100 chain complexes", [](Criterion& c) {
        c.suite("dold-kan-roundtrip", 42, 100);
        for (std::uint64_t k = 0; k < 100; ++k) {
            Rng rng(9, k);
            const std::size_t top = rng.below(4);
            const Complex v = random_chain_complex(rng, 3, top);
            const std::size_t L = top + 2;
            const SimplicialVS s = denormalize(v, L);
            const std::string at = " at instance " + std::to_string(k);
            c.require(check_simplicial_identities(s), "simplicial identities" + at);
            for (std::size_t n = 0; n <= L; ++n) {
                std::size_t expected = 0;
                for (std::size_t p = 0; p <= n; ++p)
                    expected += pascal(n, p) * chain_dim(v, static_cast<int>(p));
                c.require(s.dim(n) == expected, "level dimension" + at);
            }
            const Complex back = normalize(s);
            for (int n = 0; n < static_cast<int>(L); ++n)
                c.require(chain_dim(back, n) == chain_dim(v, n), "normalized dimension" + at);
            c.require(is_isomorphic(back, v), "normalization not isomorphic" + at);
        }
    });

    failed += report(5, "Rees audit on 100 filtered and 50 graded instances", [](Criterion& c) {
        c.suite("rees-audit", 42, 100);
        c.suite("graded-essential-image", 42, 50);
    });

    failed += report(6, "contracting homotopies and obstruction groups", [](Criterion& c) {
        c.suite("contracting-homotopy", 42, 100);
        c.suite("obstruction", 42, 50);
    });

    failed += report(7, "Grassmannian and flag shadows", [](Criterion& c) {
        c.suite("grassmann", 42, 50);
        c.suite("flag", 42, 50);
        const auto load = [](const std::string& f) {
            return grass_point_from_json(parse_json_text(testing::read_file(testing::fixture_path(f))));
        };
        const GrassPoint line = load("grass_line.json");
        c.require(validate_grass_point(line).valid, "line example should be valid");
        c.require(validate_grass_point(load("grass_acyclic.json")).valid, "acyclic example should be valid");
        c.require(!validate_grass_point(load("grass_noninjective.json")).valid,
                  "non-injective example should be invalid");
        const Shadow s = shadow_grass(line);
        c.require(s.dims.at(0) == 1 && canonical_column_basis(s.basis.at(0)) == s.basis.at(0),
                  "line shadow should be a canonical line");
        const FlagPoint flag =
            flag_point_from_json(parse_json_text(testing::read_file(testing::fixture_path("flag_line.json"))));
        const auto chain = shadow_flag(flag);
        c.require(chain.size() == 2 && shadow_contained(chain[1], chain[0]), "flag shadows should be nested");
    });

    failed += report(8, "CLI round trip and harness reproducibility", [](Criterion& c) {
        for (const auto& f : testing::fixtures()) {
            const std::string text = testing::read_file(testing::fixture_path(f.file));
            c.require(!text.empty(), f.file + " missing");
            c.require(testing::reemit(f.type, parse_json_text(text)).dump() + "\n" == text, f.file + " not canonical");
            if (f.type == "pair")
                continue;
            std::string out;
            c.require(run_cli_text({"canon", "--type", f.type, testing::fixture_path(f.file)}, out) == exit_ok &&
                          out == text,
                      f.file + ": canon differs");
        }
        for (const auto& name : suite_names()) {
            std::string a, b;
            const std::vector<std::string> args{"harness", "--suite", name, "--seed", "17", "--count", "5"};
            run_cli_text(args, a);
            run_cli_text(args, b);
            c.require(!a.empty() && a == b, name + ": harness output differs between runs");
            c.require(Json::parse(a) == to_json(run_suite(name, 17, 5)), name + ": harness output differs from library");
        }
    });

    return failed;
}
