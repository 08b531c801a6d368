#include "doctest.h"

#include "eqsched/commands.hpp"
#include "eqsched/instance_gen.hpp"
#include "eqsched/text_format.hpp"
#include "support/brute_force.hpp"

using namespace eqsched;

namespace {

const std::string kFig1 = "p 2\njob A 0 2\njob B 3 5\njob C 1 7\n";

std::vector<std::string> all_solvers() { return {"dp", "legacy", "oracle"}; }

}  // namespace

TEST_CASE("solve command") {
    SUBCASE("fig1") {
        const auto r = cmd_solve(kFig1);
        CHECK(r.exit_code == kExitOk);
        CHECK(r.out == "count 3\nsched A 0\nsched B 3\nsched C 5\n");
        CHECK(r.table_csv.empty());
    }
    SUBCASE("empty") {
        CHECK(cmd_solve("p 3\n").out == "count 0\n");
    }
    SUBCASE("jx 101") {
        const auto r = cmd_solve(emit_instance(gen_jx(JxSpec::from_bits("101", 9))));
        CHECK(r.out.rfind("count 11\n", 0) == 0);
    }
    SUBCASE("output stays in the input's time base") {
        const auto r = cmd_solve("p 2\njob C 101 107\njob A 100 102\njob B 103 105\n");
        CHECK(r.out == "count 3\nsched A 100\nsched B 103\nsched C 105\n");
    }
    SUBCASE("parse errors exit 2 with the line") {
        const auto r = cmd_solve("p 2\njob A 0\n");
        CHECK(r.exit_code == kExitUsage);
        CHECK(r.err.find("line 2") != std::string::npos);
        CHECK(r.out.empty());
    }
    SUBCASE("table dump") {
        const auto r = cmd_solve("p 2\njob a 5 7\n", true);
        CHECK(r.out == "count 1\nsched a 5\n");
        CHECK(r.table_csv.rfind("k,alpha,u,beta\n0,-2,0,0\n", 0) == 0);
        CHECK(cmd_solve("p 2\n", true).table_csv == "k,alpha,u,beta\n");
    }
}

TEST_CASE("other single-solver commands") {
    CHECK(cmd_oracle(kFig1).out == "count 3\nsched A 0\nsched B 3\nsched C 5\n");
    CHECK(cmd_legacy(kFig1).out == "count 2\nsched B 3\nsched C 5\n");
    CHECK(cmd_legacy(kFig1, true).out.rfind("S^k_x  x=  0", 0) == 0);
    CHECK(cmd_check_feasible(kFig1).out == "feasible yes\nsched A 0\nsched B 3\nsched C 5\n");
    CHECK(cmd_check_feasible("p 2\njob a 0 2\njob b 0 2\n").out == "feasible no\n");

    const auto big = cmd_oracle(emit_instance(gen_random(RandomSpec{21, 2, 10, 0, 5, 3})));
    CHECK(big.exit_code == kExitUsage);
    CHECK(big.err.find("at most 20") != std::string::npos);
    CHECK(cmd_oracle("p 0\n").exit_code == kExitUsage);
}

TEST_CASE("validate command") {
    CHECK(cmd_validate(kFig1, "sched A 0\nsched B 3\n").out == "ok\n");
    const auto bad = cmd_validate(kFig1, "sched A 0\nsched C 1\n");
    CHECK(bad.exit_code == kExitFailure);
    CHECK(bad.out.rfind("violation ", 0) == 0);
    CHECK(cmd_validate(kFig1, "sched A\n").exit_code == kExitUsage);
    CHECK(cmd_validate(kFig1, "count 3\nsched A 0\nsched B 3\nsched C 5\n").out == "ok\n");
}

TEST_CASE("compare") {
    SUBCASE("fig1: legacy trails, which is not a failure") {
        const auto r = cmd_compare(kFig1, all_solvers());
        CHECK(r.exit_code == kExitOk);
        CHECK(r.out ==
              "solver dp count 3 makespan 7 valid yes\n"
              "solver legacy count 2 makespan 7 valid yes\n"
              "solver oracle count 3 makespan 7 valid yes\n"
              "check dp_eq_oracle pass\n"
              "check legacy_le_dp pass\n");
    }
    SUBCASE("single job") {
        const auto report = compare_solvers(Instance{3, {{"a", 4, 9}}}, all_solvers());
        CHECK(report.ok());
        for (const auto& run : report.runs) {
            CHECK(run.count == 1);
        }
    }
    SUBCASE("oracle skipped above its cap") {
        const auto r = cmd_compare(emit_instance(gen_random(RandomSpec{25, 3, 60, 0, 9, 2})), all_solvers());
        CHECK(r.exit_code == kExitOk);
        CHECK(r.out.find("solver oracle skipped\n") != std::string::npos);
        CHECK(r.out.find("dp_eq_oracle") == std::string::npos);
    }
    SUBCASE("flags are computed, not assumed") {
        ComparisonReport report;
        report.runs = {{"dp", true, 2, 5, true, 0.0}, {"oracle", true, 3, 5, true, 0.0}};
        report.dp_matches_oracle = false;
        CHECK_FALSE(report.ok());
        CHECK(report.serialize().find("check dp_eq_oracle FAIL\n") != std::string::npos);
    }
    SUBCASE("timing column") {
        const auto r = cmd_compare(kFig1, std::vector<std::string>{"dp"}, true);
        CHECK(r.out.find(" time_ms ") != std::string::npos);
    }
    SUBCASE("unknown solver") {
        CHECK(cmd_compare(kFig1, std::vector<std::string>{"greedy"}).exit_code == kExitUsage);
    }
    SUBCASE("random instances agree") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            CHECK(compare_solvers(testing::random_instance(seed), all_solvers()).ok());
        }
    }
}

TEST_CASE("bench") {
    const std::vector<std::size_t> sizes{10, 20, 40};
    const auto rows = run_bench(sizes, 1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].median_ms <= rows[1].median_ms);
    CHECK(rows[1].median_ms <= rows[2].median_ms);
    const std::string csv = bench_csv(rows);
    CHECK(csv.rfind("n,median_ms\n10,", 0) == 0);
}
