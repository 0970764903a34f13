#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fqmzv/json_io.hpp"

namespace fqmzv {

/// Parameter grid for the verification suites and the conjecture search.
/// Exponents s run over [-max_minus_s, -min_minus_s]; zeta tuples take every
/// combination of those exponents at depths [min_depth, max_depth].
struct GridSpec {
    std::vector<std::uint32_t> q_list{2, 3};
    std::size_t max_d = 4;
    std::int64_t min_minus_s = 0;
    std::int64_t max_minus_s = 10;
    std::size_t min_depth = 1;
    std::size_t max_depth = 3;
    std::vector<std::size_t> prime_degrees{1, 2};
    std::uint64_t enum_cost_cap = kDefaultEnumerationCap;
    std::uint64_t max_cells = 10'000'000;

    Json to_json() const;
    static GridSpec from_json(const Json& j);
};

struct CellFailure {
    std::string cell;
    std::string check;  // stable id of the violated check, e.g. "oracle-equivalence"
    std::string expected;
    std::string actual;
};

/// Outcome of one suite run. Failures empty means the suite passed;
/// counterexamples (conjecture search only) are findings, not failures.
struct SuiteReport {
    std::string suite;
    std::uint64_t cells = 0;
    std::uint64_t skipped = 0;
    std::vector<CellFailure> failures;
    std::vector<Json> counterexamples;
    double wall_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Execution knobs. `emit` receives one serialized JSON line per record
/// (header first, then one line per evaluated cell) in deterministic grid
/// order regardless of `jobs`. Cells whose key is in `skip_keys` are not
/// re-evaluated (resume).
struct RunOptions {
    int jobs = 1;
    std::function<void(const std::string&)> emit;
    std::set<std::string> skip_keys;
    bool emit_header = true;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one verification suite over the grid. Throws std::invalid_argument
/// for an unknown name and CostGuardExceeded when the grid exceeds its caps.
SuiteReport run_suite(const std::string& name, const GridSpec& grid, const RunOptions& opts = {});

/// Exhaustive zero-versus-trivial check over primes of degree >= 2. A zero
/// without a trivial witness is emitted as a counterexample record; the run
/// itself passes when it completes.
SuiteReport search_conjecture(const GridSpec& grid, const RunOptions& opts = {});

}  // namespace fqmzv
