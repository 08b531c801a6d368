#pragma once

#include "eqsched/core.hpp"

namespace eqsched {

struct FeasibilityOutcome {
    bool feasible = false;
    Schedule witness;  // canonical full schedule when feasible, empty otherwise
};

// Decides whether every job of a normalized instance can meet its deadline.
//
// Left-to-right scan over the candidate times x in {r_j + l*p : l = 0..n}
// plus d_max. At each x, S_x is the state at x - p (the latest candidate at
// or before it) extended by the earliest-deadline released job it does not
// yet contain, provided the extension meets that job's deadline and is
// active, i.e. contains every job whose deadline is at most its makespan.
// Otherwise S_x is carried over from the previous candidate.
FeasibilityOutcome check_feasible(const Instance& instance);

}  // namespace eqsched
