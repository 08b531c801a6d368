#pragma once

// Carlier's 1981 maximization procedure, implemented literally. It is not
// optimal; it is kept to reproduce its known failure and as a differential
// testing foil.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqsched/core.hpp"

namespace eqsched {

// S^k_x for k = 1..n and x = 0..d_max. An undefined cell is std::nullopt.
struct LegacyTrace {
    using Cell = std::optional<std::vector<std::string>>;

    Time d_max = -1;
    std::vector<std::vector<Cell>> rows;  // rows[k - 1][x]

    // Cells whose extension would miss the appended job's deadline and fell
    // back to S^k_{x-1}. Pairs of (k, x).
    std::vector<std::pair<std::size_t, Time>> guard_fired;

    std::size_t row_count() const { return rows.size(); }
    const Cell& at(std::size_t k, Time x) const { return rows.at(k - 1).at(static_cast<std::size_t>(x)); }
};

struct LegacyResult {
    Schedule schedule;
    LegacyTrace trace;
};

// For k = 1..n and x = p..d_max:
//   H  = {j : r_j + p <= x} - S^{k-1}_{x-p}
//   H' = {j in H : d_j >= x}
//   S^k_x = S^k_{x-1}                 if H' is empty
//         = S^{k-1}_{x-p} (+) m       otherwise, m earliest deadline in H'
// S^0_x is empty and S^k_x (k >= 1) starts undefined. The extension falls
// back to S^k_{x-1} when S^{k-1}_{x-p} is undefined or when m would miss its
// deadline. Returns S^k_{d_max} for the largest defined k, left shifted.
LegacyResult run_algorithm1(const Instance& instance);

// Aligned table in the layout
//   S^k_x  x=  0  1  2 ...
//   k=1        -  -  A ...
// Cells concatenate job ids when every id is one character, and join them
// with ',' otherwise.
std::string format_trace(const LegacyTrace& trace);

}  // namespace eqsched
