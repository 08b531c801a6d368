#pragma once

// Named instances and seeded random instances.

#include <cstdint>
#include <string>
#include <vector>

#include "eqsched/core.hpp"

namespace eqsched {

// Three jobs with p = 2 on which Carlier's maximization procedure keeps only
// two: A = (0, 2), B = (3, 5), C = (1, 7).
Instance gen_fig1();

// Adversarial family indexed by a bit string x_0..x_{m-1}. Requires m >= 1
// and p >= 2m + 3.
struct JxSpec {
    std::vector<bool> bits;
    Time p = 0;

    std::size_t m() const { return bits.size(); }
    std::size_t ones() const;

    // u_i = i(2p + 1), i = 0..m
    Time u(std::size_t i) const;
    // v_i = m(2p + 1) + sum_{j=i}^{m-1} (p + (p + 1) x_j), i = 0..m
    Time v(std::size_t i) const;
    // u_m == v_m
    Time t0() const { return u(m()); }

    // Parses "101"; p defaults to 2m + 3 when zero.
    static JxSpec from_bits(const std::string& bits, Time p = 0);
};

// Throws std::invalid_argument when the spec is out of range.
void check_jx_spec(const JxSpec& spec);

// Four jobs per bit: A_i, B_i, C_i, D_i released at u_i, u_i + 1, u_i + p,
// u_i + p + 1, with deadlines chosen by x_i. Ids are "A0", "B0", ...
Instance gen_jx(const JxSpec& spec);

// The optimal schedule for gen_jx(spec), 3m + ones() jobs, sorted by start.
Schedule gen_rx(const JxSpec& spec);

struct RandomSpec {
    std::size_t n = 0;
    Time p = 1;
    Time release_max = 0;  // releases uniform in [0, release_max]
    Time slack_min = 0;    // deadline = release + p + slack
    Time slack_max = 0;
    std::uint64_t seed = 0;
};

// Deterministic across platforms for a fixed spec. Job ids are "J" followed
// by a zero-padded index, so lexicographic and numeric order agree.
Instance gen_random(const RandomSpec& spec);

}  // namespace eqsched
