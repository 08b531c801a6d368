#include "eqsched/feasibility.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

namespace eqsched {

namespace {

struct State {
    Time x = 0;
    std::vector<std::size_t> sequence;  // job indices in execution order
    std::vector<bool> member;
    Time completion = 0;
};

}  // namespace

FeasibilityOutcome check_feasible(const Instance& instance) {
    require_normalized(instance);
    const std::size_t n = instance.size();
    if (n == 0) {
        return {true, {}};
    }
    const Time p = instance.p;
    const Time d_max = instance.max_deadline();

    std::vector<Time> candidates;
    for (const auto& j : instance.jobs) {
        for (std::size_t l = 0; l <= n; ++l) {
            const Time x = j.release + static_cast<Time>(l) * p;
            if (x <= d_max) {
                candidates.push_back(x);
            }
        }
    }
    candidates.push_back(d_max);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const State empty{0, {}, std::vector<bool>(n, false), 0};
    std::vector<State> states;
    states.reserve(candidates.size());

    // State in force at time t: the latest candidate <= t, or the empty schedule.
    auto state_at = [&](Time t) -> const State& {
        const auto it = std::upper_bound(states.begin(), states.end(), t,
                                         [](Time value, const State& s) { return value < s.x; });
        return it == states.begin() ? empty : *std::prev(it);
    };

    for (const Time x : candidates) {
        const State& base = state_at(x - p);
        std::optional<std::size_t> pick;
        for (std::size_t j = 0; j < n; ++j) {
            // Jobs are deadline sorted, so the first hit is the earliest deadline.
            if (!base.member[j] && instance.jobs[j].release <= x - p) {
                pick = j;
                break;
            }
        }
        State next;
        if (!pick) {
            next = base;
        } else {
            const Job& m = instance.jobs[*pick];
            const Time start = std::max(base.completion, m.release);
            const Time completion = start + p;
            bool accept = completion <= m.deadline;
            for (std::size_t j = 0; accept && j < n; ++j) {
                if (j != *pick && !base.member[j] && instance.jobs[j].deadline <= completion) {
                    accept = false;
                }
            }
            if (accept) {
                next = base;
                next.sequence.push_back(*pick);
                next.member[*pick] = true;
                next.completion = completion;
            } else {
                next = states.empty() ? empty : states.back();
            }
        }
        next.x = x;
        states.push_back(std::move(next));
    }

    const State& final_state = states.back();
    if (final_state.sequence.size() != n) {
        return {false, {}};
    }
    return {true, canonicalize(instance, left_shifted(instance, final_state.sequence))};
}

}  // namespace eqsched
