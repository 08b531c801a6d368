#include "doctest.h"

#include "eqsched/core.hpp"
#include "eqsched/instance_gen.hpp"
#include "support/brute_force.hpp"

using namespace eqsched;

namespace {

Schedule sched(std::initializer_list<ScheduledJob> entries) {
    return Schedule{std::vector<ScheduledJob>(entries)};
}

}  // namespace

TEST_CASE("normalize shifts releases to zero and sorts by deadline") {
    SUBCASE("pure shift") {
        const auto n = normalize(Instance{2, {{"A", 5, 9}}});
        CHECK(n.offset == 5);
        CHECK(n.instance == Instance{2, {{"A", 0, 4}}});
    }
    SUBCASE("fig1 job set ends up in deadline order") {
        const auto n = normalize(Instance{2, {{"C", 1, 7}, {"A", 0, 2}, {"B", 3, 5}}});
        CHECK(n.offset == 0);
        CHECK(n.instance == gen_fig1());
    }
    SUBCASE("empty") {
        const auto n = normalize(Instance{3, {}});
        CHECK(n.offset == 0);
        CHECK(n.instance.empty());
    }
    SUBCASE("deadline ties broken by id") {
        const auto n = normalize(Instance{1, {{"b", 0, 4}, {"a", 1, 4}, {"c", 2, 3}}});
        CHECK(n.instance.jobs[0].id == "c");
        CHECK(n.instance.jobs[1].id == "a");
        CHECK(n.instance.jobs[2].id == "b");
    }
    SUBCASE("negative releases") {
        const auto n = normalize(Instance{1, {{"a", -4, 0}}});
        CHECK(n.offset == -4);
        CHECK(n.instance.jobs[0].release == 0);
        CHECK(n.instance.jobs[0].deadline == 4);
        CHECK(is_normalized(n.instance));
    }
    SUBCASE("unschedulable jobs are kept") {
        const auto n = normalize(Instance{5, {{"a", 0, 3}}});
        CHECK(n.instance.size() == 1);
    }
}

TEST_CASE("normalize rejects bad instances") {
    CHECK_THROWS_AS(normalize(Instance{0, {}}), InvalidInstance);
    CHECK_THROWS_AS(normalize(Instance{-1, {}}), InvalidInstance);
    CHECK_THROWS_AS(normalize(Instance{1, {{"a", 0, 1}, {"a", 1, 2}}}), InvalidInstance);
    const Time big = std::numeric_limits<Time>::max();
    CHECK_THROWS_AS(normalize(Instance{1, {{"a", -big, 0}, {"b", big, big}}}), InvalidInstance);
}

TEST_CASE("solvers' precondition check") {
    CHECK(is_normalized(gen_fig1()));
    CHECK_FALSE(is_normalized(Instance{2, {{"C", 1, 7}, {"A", 0, 2}}}));
    CHECK_THROWS_AS(require_normalized(Instance{1, {{"a", 1, 3}}}), InvalidInstance);
}

TEST_CASE("validate_schedule") {
    const Instance fig1 = gen_fig1();
    SUBCASE("fig1 optimum is valid") {
        CHECK(validate_schedule(fig1, sched({{"A", 0}, {"B", 3}, {"C", 5}})).ok());
    }
    SUBCASE("overlap") {
        const auto r = validate_schedule(fig1, sched({{"A", 0}, {"C", 1}}));
        CHECK(r.violation == Violation::overlap);
        CHECK(r.job == "C");
    }
    SUBCASE("deadline") {
        CHECK(validate_schedule(fig1, sched({{"A", 1}})).violation == Violation::after_deadline);
    }
    SUBCASE("release") {
        CHECK(validate_schedule(fig1, sched({{"B", 2}})).violation == Violation::before_release);
    }
    SUBCASE("unknown") {
        CHECK(validate_schedule(fig1, sched({{"Z", 0}})).violation == Violation::unknown_job);
    }
    SUBCASE("duplicate") {
        CHECK(validate_schedule(fig1, sched({{"C", 1}, {"C", 5}})).violation == Violation::duplicate_job);
    }
    SUBCASE("touching jobs do not overlap, in any entry order") {
        CHECK(validate_schedule(fig1, sched({{"C", 5}, {"B", 3}})).ok());
    }
    SUBCASE("empty schedule") {
        CHECK(validate_schedule(fig1, Schedule{}).ok());
    }
}

TEST_CASE("makespan") {
    CHECK(makespan(Schedule{}, 2) == 0);
    CHECK(makespan(sched({{"A", 0}, {"C", 5}, {"B", 3}}), 2) == 7);
}

TEST_CASE("canonicalize") {
    SUBCASE("canonical input is a fixpoint") {
        const Instance fig1 = gen_fig1();
        const Schedule s = sched({{"A", 0}, {"B", 3}, {"C", 5}});
        CHECK(is_canonical(fig1, s));
        CHECK(canonicalize(fig1, s) == s);
    }
    SUBCASE("entry order does not matter") {
        const Instance fig1 = gen_fig1();
        CHECK(canonicalize(fig1, sched({{"A", 0}, {"C", 5}, {"B", 3}})) ==
              sched({{"A", 0}, {"B", 3}, {"C", 5}}));
    }
    SUBCASE("swap then left shift") {
        const Instance inst{2, {{"X", 0, 10}, {"Y", 0, 6}}};
        const Schedule s = sched({{"X", 1}, {"Y", 3}});
        CHECK_FALSE(is_earliest_deadline(inst, s));
        CHECK(canonicalize(inst, s) == sched({{"Y", 0}, {"X", 2}}));
    }
    SUBCASE("no swap when the later job is not yet released") {
        const Instance inst{2, {{"X", 0, 10}, {"Y", 3, 6}}};
        CHECK(canonicalize(inst, sched({{"X", 1}, {"Y", 4}})) == sched({{"X", 0}, {"Y", 3}}));
    }
    SUBCASE("invalid input is rejected") {
        CHECK_THROWS_AS(canonicalize(gen_fig1(), sched({{"A", 0}, {"C", 1}})), InvalidSchedule);
    }
}

TEST_CASE("canonicalize properties on random valid schedules") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const Instance inst = testing::random_instance(seed);
        const Schedule s = testing::random_valid_schedule(inst, seed * 7 + 1);
        REQUIRE(validate_schedule(inst, s).ok());
        const Schedule c = canonicalize(inst, s);
        CAPTURE(seed);
        CHECK(validate_schedule(inst, c).ok());
        CHECK(is_canonical(inst, c));
        CHECK(canonicalize(inst, c) == c);
        CHECK(makespan(c, inst.p) <= makespan(s, inst.p));
        auto a = s.job_sequence();
        auto b = c.job_sequence();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("extend") {
    const Instance fig1 = gen_fig1();
    SUBCASE("onto the empty schedule") {
        CHECK(extend(fig1, Schedule{}, "A") == sched({{"A", 0}}));
    }
    SUBCASE("after the makespan") {
        CHECK(extend(fig1, sched({{"A", 0}}), "C") == sched({{"A", 0}, {"C", 2}}));
    }
    SUBCASE("at the release") {
        CHECK(extend(fig1, sched({{"A", 0}}), "B") == sched({{"A", 0}, {"B", 3}}));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(extend(fig1, sched({{"A", 0}}), "A"), InvalidSchedule);
        CHECK_THROWS_AS(extend(fig1, sched({{"C", 2}}), "B"), InvalidSchedule);  // B would end at 6 > 5
        CHECK_THROWS_AS(extend(fig1, Schedule{}, "Q"), InvalidSchedule);
    }
}

TEST_CASE("time grid") {
    SUBCASE("one job") {
        const TimeGrid g = build_time_grid(Instance{2, {{"a", 0, 2}}});
        CHECK(std::vector<Time>(g.points().begin(), g.points().end()) == std::vector<Time>{-2, 0, 2});
    }
    SUBCASE("fig1") {
        const TimeGrid g = build_time_grid(normalize(gen_fig1()).instance);
        CHECK(std::vector<Time>(g.points().begin(), g.points().end()) ==
              std::vector<Time>{-2, -1, 0, 1, 2, 3, 4, 5, 6, 7, 9});
        CHECK(g.index_of(-2) == std::size_t{0});
        CHECK_FALSE(g.contains(8));
    }
    SUBCASE("empty") {
        CHECK(build_time_grid(Instance{2, {}}).empty());
    }
}

TEST_CASE("time grid holds every left-shifted start and completion") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Instance inst = normalize(testing::random_instance(seed, 6)).instance;
        const TimeGrid g = build_time_grid(inst);
        CHECK(g.size() <= inst.size() * (inst.size() + 2));
        if (!inst.empty()) {
            CHECK(g[0] == -inst.p);
            CHECK(g.contains(0));
        }
        for (const auto& seq : testing::all_sequences(inst.size())) {
            const auto starts = testing::left_shift_starts(inst, seq);
            for (Time s : starts) {
                REQUIRE(g.contains(s));
                REQUIRE(g.contains(s + inst.p));
            }
        }
    }
}
