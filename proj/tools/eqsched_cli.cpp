// eqsched: exact throughput maximization for equal-length jobs on one
// machine, plus the reference and legacy solvers, generators and checks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eqsched/commands.hpp"
#include "eqsched/corpus.hpp"
#include "eqsched/instance_gen.hpp"
#include "eqsched/text_format.hpp"

namespace {

using namespace eqsched;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    out << text;
}

int finish(const CommandOutput& r, const std::string& output) {
    if (!r.out.empty()) {
        write_output(output, r.out);
    }
    std::cerr << r.err;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact scheduling of equal-length jobs with release times and deadlines"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input,-i", input, "Instance file, '-' for stdin")->capture_default_str();
        sub->add_option("--output,-o", output, "Output file, '-' for stdout")->capture_default_str();
    };

    auto* solve = app.add_subcommand("solve", "Maximum throughput via the O(n^5) dynamic program");
    add_io(solve);
    std::string dump_table;
    solve->add_option("--dump-table", dump_table, "Write finite table entries as CSV k,alpha,u,beta");

    auto* oracle = app.add_subcommand("oracle", "Maximum throughput via subset enumeration (n <= 20)");
    add_io(oracle);

    auto* legacy = app.add_subcommand("legacy", "Carlier's maximization procedure (not optimal)");
    add_io(legacy);
    bool trace = false;
    legacy->add_flag("--trace", trace, "Print the S^k_x table instead of the schedule");

    auto* feasible = app.add_subcommand("check-feasible", "Can every job meet its deadline?");
    add_io(feasible);

    auto* validate = app.add_subcommand("validate", "Check a schedule against an instance");
    add_io(validate);
    std::string schedule_path;
    validate->add_option("--schedule,-s", schedule_path, "Schedule file")->required();

    auto* compare = app.add_subcommand("compare", "Run several solvers and cross-check them");
    add_io(compare);
    std::vector<std::string> solvers{"dp", "legacy", "oracle"};
    compare->add_option("--solvers", solvers, "Comma separated: dp,legacy,oracle")
        ->delimiter(',')
        ->capture_default_str();
    bool timing = false;
    compare->add_flag("--timing", timing, "Include wall-clock times");

    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    gen->add_option("--output,-o", output, "Output file, '-' for stdout")->capture_default_str();
    auto* gen_fig1_cmd = gen->add_subcommand("fig1", "Three-job counter-example");
    auto* gen_jx_cmd = gen->add_subcommand("jx", "Adversarial family for a bit string");
    std::string bits;
    Time jx_p = 0;
    gen_jx_cmd->add_option("--bits", bits, "Bit string, e.g. 101")->required();
    gen_jx_cmd->add_option("--p", jx_p, "Processing time (default 2m+3)");
    auto* gen_random_cmd = gen->add_subcommand("random", "Seeded random instance");
    for (auto* sub : {gen_fig1_cmd, gen_jx_cmd, gen_random_cmd}) {
        sub->add_option("--output,-o", output, "Output file, '-' for stdout");
    }
    RandomSpec random_spec;
    random_spec.release_max = 20;
    random_spec.slack_max = 12;
    gen_random_cmd->add_option("--n", random_spec.n, "Number of jobs")->required();
    gen_random_cmd->add_option("--p", random_spec.p, "Processing time")->required();
    gen_random_cmd->add_option("--seed", random_spec.seed, "Seed")->required();
    gen_random_cmd->add_option("--rmax", random_spec.release_max, "Releases in [0, rmax]")->capture_default_str();
    gen_random_cmd->add_option("--smin", random_spec.slack_min, "Minimum slack")->capture_default_str();
    gen_random_cmd->add_option("--smax", random_spec.slack_max, "Maximum slack")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Median solve time per instance size, as CSV");
    std::vector<std::size_t> sizes{15, 30, 60};
    std::uint64_t seed = 1;
    Time bench_p = 5;
    std::size_t reps = 3;
    bench->add_option("--sizes", sizes, "Comma separated sizes")->delimiter(',')->capture_default_str();
    bench->add_option("--seed", seed, "Seed")->capture_default_str();
    bench->add_option("--p", bench_p, "Processing time")->capture_default_str();
    bench->add_option("--reps", reps, "Repetitions per size (at least 3)")->capture_default_str();
    bench->add_option("--output,-o", output, "Output file, '-' for stdout")->capture_default_str();

    auto* verify = app.add_subcommand("verify-corpus", "Rerun the golden corpus and byte-compare");
    std::string corpus_dir = "corpus";
    verify->add_option("--dir", corpus_dir, "Corpus root")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            const CommandOutput r = cmd_solve(read_input(input), !dump_table.empty());
            if (r.exit_code == kExitOk && !dump_table.empty()) {
                write_output(dump_table, r.table_csv);
            }
            return finish(r, output);
        }
        if (*oracle) {
            return finish(cmd_oracle(read_input(input)), output);
        }
        if (*legacy) {
            return finish(cmd_legacy(read_input(input), trace), output);
        }
        if (*feasible) {
            return finish(cmd_check_feasible(read_input(input)), output);
        }
        if (*validate) {
            return finish(cmd_validate(read_input(input), read_input(schedule_path)), output);
        }
        if (*compare) {
            return finish(cmd_compare(read_input(input), solvers, timing), output);
        }
        if (*gen) {
            Instance instance;
            if (*gen_fig1_cmd) {
                instance = gen_fig1();
            } else if (*gen_jx_cmd) {
                instance = gen_jx(JxSpec::from_bits(bits, jx_p));
            } else if (*gen_random_cmd) {
                instance = gen_random(random_spec);
            }
            write_output(output, emit_instance(instance));
            return kExitOk;
        }
        if (*bench) {
            write_output(output, bench_csv(run_bench(sizes, seed, bench_p, reps)));
            return kExitOk;
        }
        if (*verify) {
            const CorpusReport report = verify_corpus(corpus_dir);
            std::cout << report.summary();
            return report.ok() ? kExitOk : kExitFailure;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
