#include "doctest.h"

#include <fstream>
#include <sstream>

#include "eqsched/instance_gen.hpp"
#include "eqsched/text_format.hpp"

using namespace eqsched;

namespace {

std::vector<JxSpec> all_jx_specs(std::size_t max_m) {
    std::vector<JxSpec> out;
    for (std::size_t m = 1; m <= max_m; ++m) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            std::string bits;
            for (std::size_t i = 0; i < m; ++i) {
                bits += (mask >> i) & 1 ? '1' : '0';
            }
            out.push_back(JxSpec::from_bits(bits));
        }
    }
    return out;
}

const Job& job(const Instance& inst, const std::string& id) {
    return inst.jobs[*inst.find(id)];
}

// Idle time inside [lo, hi] not covered by any job.
Time idle_within(const Schedule& s, Time p, Time lo, Time hi) {
    Time busy = 0;
    for (const auto& e : s.entries) {
        busy += std::max<Time>(0, std::min(hi, e.start + p) - std::max(lo, e.start));
    }
    return (hi - lo) - busy;
}

}  // namespace

TEST_CASE("fig1") {
    const Instance i = gen_fig1();
    CHECK(emit_instance(i) == "p 2\njob A 0 2\njob B 3 5\njob C 1 7\n");
    for (const auto& j : i.jobs) {
        CHECK(j.deadline >= j.release + i.p);
    }
}

TEST_CASE("jx formulas for one bit") {
    SUBCASE("x = 1") {
        const JxSpec s = JxSpec::from_bits("1", 5);
        CHECK(s.u(0) == 0);
        CHECK(s.u(1) == 11);
        CHECK(s.v(1) == 11);
        CHECK(s.v(0) == 22);
        CHECK(emit_instance(gen_jx(s)) == "p 5\njob A0 0 22\njob B0 1 21\njob C0 5 10\njob D0 6 16\n");
        CHECK(emit_schedule(gen_rx(s)) == "sched A0 0\nsched C0 5\nsched D0 11\nsched B0 16\n");
    }
    SUBCASE("x = 0") {
        const JxSpec s = JxSpec::from_bits("0", 5);
        CHECK(s.v(0) == 16);
        CHECK(emit_instance(gen_jx(s)) == "p 5\njob A0 0 16\njob B0 1 13\njob C0 5 10\njob D0 6 12\n");
        CHECK(emit_schedule(gen_rx(s)) == "sched B0 1\nsched D0 6\nsched A0 11\n");
    }
}

TEST_CASE("jx tail sums depend on later bits") {
    const JxSpec a = JxSpec::from_bits("01", 7);
    const JxSpec b = JxSpec::from_bits("00", 7);
    CHECK(a.v(0) - b.v(0) == 8);
    CHECK(a.v(1) - b.v(1) == 8);
    CHECK(a.v(2) == b.v(2));
    CHECK(a.t0() == a.v(2));
}

TEST_CASE("jx spec checks") {
    CHECK(JxSpec::from_bits("101").p == 9);
    CHECK_THROWS_AS(JxSpec::from_bits(""), std::invalid_argument);
    CHECK_THROWS_AS(JxSpec::from_bits("12"), std::invalid_argument);
    CHECK_THROWS_AS(check_jx_spec(JxSpec{{true, false}, 6}), std::invalid_argument);
    CHECK_NOTHROW(check_jx_spec(JxSpec{{true, false}, 7}));
    CHECK_THROWS_AS(gen_jx(JxSpec{{true}, 4}), std::invalid_argument);
}

TEST_CASE("jx family properties") {
    for (const JxSpec& spec : all_jx_specs(4)) {
        const Instance inst = gen_jx(spec);
        const Schedule rx = gen_rx(spec);
        const std::size_t m = spec.m();
        CAPTURE(emit_instance(inst));
        CHECK(inst.size() == 4 * m);
        CHECK(rx.size() == 3 * m + spec.ones());
        CHECK(validate_schedule(inst, rx).ok());
        CHECK(idle_within(rx, spec.p, 0, spec.v(0)) == static_cast<Time>(m + spec.ones()));
        for (std::size_t i = 0; i < m; ++i) {
            const std::string s = std::to_string(i);
            const Job& a = job(inst, "A" + s);
            const Job& b = job(inst, "B" + s);
            const Job& c = job(inst, "C" + s);
            const Job& d = job(inst, "D" + s);
            CHECK(c.deadline - c.release == spec.p);
            CHECK(c.deadline < d.deadline);
            CHECK(d.deadline < b.deadline);
            CHECK(b.deadline < a.deadline);
            CHECK(a.release == spec.u(i));
        }
    }
}

TEST_CASE("gen_random") {
    SUBCASE("deterministic") {
        const RandomSpec spec{30, 4, 50, -2, 9, 77};
        CHECK(emit_instance(gen_random(spec)) == emit_instance(gen_random(spec)));
        RandomSpec other = spec;
        other.seed = 78;
        CHECK(emit_instance(gen_random(spec)) != emit_instance(gen_random(other)));
    }
    SUBCASE("ranges") {
        const RandomSpec spec{200, 3, 10, -1, 4, 5};
        const Instance i = gen_random(spec);
        CHECK(i.size() == 200);
        CHECK(i.jobs[7].id == "J007");
        for (const auto& j : i.jobs) {
            CHECK(j.release >= 0);
            CHECK(j.release <= 10);
            CHECK(j.deadline - j.release - 3 >= -1);
            CHECK(j.deadline - j.release - 3 <= 4);
        }
    }
    SUBCASE("empty") {
        CHECK(gen_random(RandomSpec{0, 3, 10, 0, 4, 5}).empty());
    }
    SUBCASE("snapshot") {
        std::ifstream in(std::string(EQSCHED_SOURCE_DIR) + "/tests/golden/random_n8_p3_s42.txt");
        REQUIRE(in);
        std::ostringstream golden;
        golden << in.rdbuf();
        CHECK(emit_instance(gen_random(RandomSpec{8, 3, 20, 0, 12, 42})) == golden.str());
    }
}
