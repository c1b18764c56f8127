#pragma once

// Seeded property suites.  Instance k of a run draws everything from Rng(seed, k), so any failing
// instance can be replayed alone by its index.

#include "fdg/serialize.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fdg {

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
};

struct Counterexample {
    std::size_t index;
    std::string property;
    Json input; ///< in the CLI input format of the relevant subcommand
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::vector<PropertyResult> properties; ///< in order of first check
    std::vector<Counterexample> counterexamples; ///< the first few failures, by instance index
    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

/// Registered suite names, sorted.
std::vector<std::string> suite_names();
/// Throws UnknownSuite.  count = 0 is a vacuous pass.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t count);
Json to_json(const SuiteReport& r);

} // namespace fdg
