#pragma once

// Subcommand bodies of the `eqsched` tool. Each takes input text and returns
// what the tool prints, so the corpus checker and tests drive exactly the
// code paths the binary runs.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqsched/core.hpp"

namespace eqsched {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // validation or agreement failure
    kExitUsage = 2,    // usage, parse or input-size error
};

struct CommandOutput {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
    std::string table_csv;  // filled by solve when the table dump is requested
};

// `count <u>` followed by the schedule, in the instance's own time base.
CommandOutput cmd_solve(std::string_view instance_text, bool dump_table = false);
CommandOutput cmd_oracle(std::string_view instance_text);
// With `trace`, prints the S^k_x table instead of the schedule.
CommandOutput cmd_legacy(std::string_view instance_text, bool trace = false);
// `feasible yes` plus the witness, or `feasible no`.
CommandOutput cmd_check_feasible(std::string_view instance_text);
// `ok`, or the first violation with exit code 1.
CommandOutput cmd_validate(std::string_view instance_text, std::string_view schedule_text);

struct SolverRun {
    std::string name;
    bool ran = false;           // false when the oracle was skipped for size
    std::size_t count = 0;
    Time makespan = 0;
    bool valid = false;
    double wall_ms = 0.0;
};

struct ComparisonReport {
    std::vector<SolverRun> runs;
    std::optional<bool> dp_matches_oracle;  // set when both ran
    std::optional<bool> legacy_within_dp;   // set when both ran

    // All schedules valid and every computed agreement flag holds.
    bool ok() const;
    // Stable line format; wall times only when `timing` is set.
    std::string serialize(bool timing = false) const;
};

// Known solver names: "dp", "legacy", "oracle". The oracle is skipped when
// the instance has more jobs than it supports. Throws std::invalid_argument
// on an unknown name.
ComparisonReport compare_solvers(const Instance& instance, std::span<const std::string> solvers);
CommandOutput cmd_compare(std::string_view instance_text, std::span<const std::string> solvers,
                          bool timing = false);

struct BenchRow {
    std::size_t n = 0;
    double median_ms = 0.0;
};

// Times solve() on one random instance per size (p fixed, releases in
// [0, n*p], slack in [0, 2p]), `repetitions` >= 3 sequential runs each.
std::vector<BenchRow> run_bench(std::span<const std::size_t> sizes, std::uint64_t seed, Time p = 5,
                                std::size_t repetitions = 3);
// `n,median_ms` CSV.
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace eqsched
