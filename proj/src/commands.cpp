#include "eqsched/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "eqsched/dp_solver.hpp"
#include "eqsched/feasibility.hpp"
#include "eqsched/instance_gen.hpp"
#include "eqsched/legacy_carlier.hpp"
#include "eqsched/oracle.hpp"
#include "eqsched/text_format.hpp"

namespace eqsched {

namespace {

struct Loaded {
    Instance raw;
    Normalized normalized;
};

// Parse + normalize, or an exit-2 diagnostic.
std::optional<Loaded> load(std::string_view text, CommandOutput& result) {
    try {
        Loaded l;
        l.raw = parse_instance(text);
        l.normalized = normalize(l.raw);
        return l;
    } catch (const ParseError& e) {
        result.exit_code = kExitUsage;
        result.err = std::string("parse error: ") + e.what() + "\n";
    } catch (const InvalidInstance& e) {
        result.exit_code = kExitUsage;
        result.err = std::string("invalid instance: ") + e.what() + "\n";
    }
    return std::nullopt;
}

// Moves a schedule back to the input time base and validates it against the
// input instance; nothing invalid is ever printed.
bool emit_checked(const Loaded& l, const Schedule& normalized_schedule, std::string& out, CommandOutput& result) {
    const Schedule schedule = shift(normalized_schedule, l.normalized.offset);
    if (const auto v = validate_schedule(l.raw, schedule); !v.ok()) {
        result.exit_code = kExitFailure;
        result.err += "internal error: refusing to print an invalid schedule: " + v.message + "\n";
        return false;
    }
    out += emit_schedule(schedule);
    return true;
}

CommandOutput emit_count_and_schedule(const Loaded& l, const MaxThroughputResult& r) {
    CommandOutput result;
    std::string out = "count " + std::to_string(r.count) + "\n";
    if (emit_checked(l, r.schedule, out, result)) {
        result.out = std::move(out);
    }
    return result;
}

}  // namespace

CommandOutput cmd_solve(std::string_view instance_text, bool dump_table) {
    CommandOutput result;
    const auto l = load(instance_text, result);
    if (!l) {
        return result;
    }
    result = emit_count_and_schedule(*l, solve(l->normalized.instance));
    if (dump_table && result.exit_code == kExitOk) {
        result.table_csv = l->normalized.instance.empty() ? std::string("k,alpha,u,beta\n")
                                                          : DPTable(l->normalized.instance).dump_csv();
    }
    return result;
}

CommandOutput cmd_oracle(std::string_view instance_text) {
    CommandOutput result;
    const auto l = load(instance_text, result);
    if (!l) {
        return result;
    }
    try {
        return emit_count_and_schedule(*l, oracle_max_throughput(l->normalized.instance));
    } catch (const OracleTooLarge& e) {
        result.exit_code = kExitUsage;
        result.err = std::string("oracle: ") + e.what() + "\n";
        return result;
    }
}

CommandOutput cmd_legacy(std::string_view instance_text, bool trace) {
    CommandOutput result;
    const auto l = load(instance_text, result);
    if (!l) {
        return result;
    }
    const LegacyResult r = run_algorithm1(l->normalized.instance);
    if (trace) {
        result.out = format_trace(r.trace);
        return result;
    }
    return emit_count_and_schedule(*l, {r.schedule.size(), r.schedule});
}

CommandOutput cmd_check_feasible(std::string_view instance_text) {
    CommandOutput result;
    const auto l = load(instance_text, result);
    if (!l) {
        return result;
    }
    const FeasibilityOutcome r = check_feasible(l->normalized.instance);
    if (!r.feasible) {
        result.out = "feasible no\n";
        return result;
    }
    std::string out = "feasible yes\n";
    if (emit_checked(*l, r.witness, out, result)) {
        result.out = std::move(out);
    }
    return result;
}

CommandOutput cmd_validate(std::string_view instance_text, std::string_view schedule_text) {
    CommandOutput result;
    Instance instance;
    Schedule schedule;
    try {
        instance = parse_instance(instance_text);
        check_instance(instance);
        schedule = parse_schedule(schedule_text);
    } catch (const ParseError& e) {
        result.exit_code = kExitUsage;
        result.err = std::string("parse error: ") + e.what() + "\n";
        return result;
    } catch (const InvalidInstance& e) {
        result.exit_code = kExitUsage;
        result.err = std::string("invalid instance: ") + e.what() + "\n";
        return result;
    }
    const auto v = validate_schedule(instance, schedule);
    if (v.ok()) {
        result.out = "ok\n";
    } else {
        result.exit_code = kExitFailure;
        result.out = "violation " + v.message + "\n";
    }
    return result;
}

bool ComparisonReport::ok() const {
    for (const auto& r : runs) {
        if (r.ran && !r.valid) {
            return false;
        }
    }
    return dp_matches_oracle.value_or(true) && legacy_within_dp.value_or(true);
}

std::string ComparisonReport::serialize(bool timing) const {
    std::string out;
    for (const auto& r : runs) {
        if (!r.ran) {
            out += "solver " + r.name + " skipped\n";
            continue;
        }
        out += "solver " + r.name + " count " + std::to_string(r.count) + " makespan " +
               std::to_string(r.makespan) + " valid " + (r.valid ? "yes" : "no");
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
            out += std::string(" time_ms ") + buf;
        }
        out += "\n";
    }
    if (dp_matches_oracle) {
        out += std::string("check dp_eq_oracle ") + (*dp_matches_oracle ? "pass" : "FAIL") + "\n";
    }
    if (legacy_within_dp) {
        out += std::string("check legacy_le_dp ") + (*legacy_within_dp ? "pass" : "FAIL") + "\n";
    }
    return out;
}

ComparisonReport compare_solvers(const Instance& instance, std::span<const std::string> solvers) {
    const Normalized norm = normalize(instance);
    const Instance& inst = norm.instance;

    ComparisonReport report;
    for (const auto& name : solvers) {
        std::function<Schedule()> run;
        if (name == "dp") {
            run = [&] { return solve(inst).schedule; };
        } else if (name == "legacy") {
            run = [&] { return run_algorithm1(inst).schedule; };
        } else if (name == "oracle") {
            run = [&] { return oracle_max_throughput(inst).schedule; };
        } else {
            throw std::invalid_argument("unknown solver '" + name + "' (known: dp, legacy, oracle)");
        }
        SolverRun r;
        r.name = name;
        if (name == "oracle" && inst.size() > kOracleMaxJobs) {
            report.runs.push_back(r);
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        const Schedule s = shift(run(), norm.offset);
        const auto t1 = std::chrono::steady_clock::now();
        r.ran = true;
        r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        r.count = s.size();
        r.makespan = s.empty() ? 0 : makespan(s, inst.p);
        r.valid = validate_schedule(instance, s).ok();
        report.runs.push_back(r);
    }

    auto find = [&](std::string_view name) -> const SolverRun* {
        for (const auto& r : report.runs) {
            if (r.name == name && r.ran) {
                return &r;
            }
        }
        return nullptr;
    };
    const SolverRun* dp = find("dp");
    const SolverRun* legacy = find("legacy");
    const SolverRun* oracle = find("oracle");
    if (dp && oracle) {
        report.dp_matches_oracle = dp->count == oracle->count;
    }
    if (dp && legacy) {
        report.legacy_within_dp = legacy->count <= dp->count;
    }
    return report;
}

CommandOutput cmd_compare(std::string_view instance_text, std::span<const std::string> solvers, bool timing) {
    CommandOutput result;
    const auto l = load(instance_text, result);
    if (!l) {
        return result;
    }
    try {
        const ComparisonReport report = compare_solvers(l->raw, solvers);
        result.out = report.serialize(timing);
        result.exit_code = report.ok() ? kExitOk : kExitFailure;
    } catch (const std::invalid_argument& e) {
        result.exit_code = kExitUsage;
        result.err = std::string(e.what()) + "\n";
    }
    return result;
}

std::vector<BenchRow> run_bench(std::span<const std::size_t> sizes, std::uint64_t seed, Time p,
                                std::size_t repetitions) {
    repetitions = std::max<std::size_t>(repetitions, 3);
    std::vector<BenchRow> rows;
    for (const std::size_t n : sizes) {
        RandomSpec spec;
        spec.n = n;
        spec.p = p;
        spec.release_max = static_cast<Time>(n) * p;
        spec.slack_min = 0;
        spec.slack_max = 2 * p;
        spec.seed = seed;
        const Instance instance = normalize(gen_random(spec)).instance;

        std::vector<double> times;
        for (std::size_t rep = 0; rep < repetitions; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const MaxThroughputResult r = solve(instance);
            const auto t1 = std::chrono::steady_clock::now();
            if (r.schedule.size() != r.count) {
                throw std::logic_error("bench: inconsistent solver result");
            }
            times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::sort(times.begin(), times.end());
        rows.push_back({n, times[times.size() / 2]});
    }
    return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
    std::string out = "n,median_ms\n";
    for (const auto& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%zu,%.3f\n", r.n, r.median_ms);
        out += buf;
    }
    return out;
}

}  // namespace eqsched
