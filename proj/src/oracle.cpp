#include "eqsched/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace eqsched {

namespace {

constexpr Time kNoFloor = std::numeric_limits<Time>::min();

struct SubsetTable {
    std::vector<Time> best;          // minimal completion per mask, kInfinity if none
    std::vector<std::int8_t> last;   // last job of the best schedule, -1 for the empty mask
};

// best[M | j] = min over j not in M of max(best[M], r_j) + p, if that meets d_j.
SubsetTable subset_dp(const Instance& instance, const std::vector<std::size_t>& jobs, Time floor) {
    const std::size_t m = jobs.size();
    const std::size_t masks = std::size_t{1} << m;
    SubsetTable t{std::vector<Time>(masks, kInfinity), std::vector<std::int8_t>(masks, -1)};
    t.best[0] = floor;
    for (std::size_t mask = 0; mask < masks; ++mask) {
        if (t.best[mask] == kInfinity) {
            continue;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::size_t{1} << i)) {
                continue;
            }
            const Job& job = instance.jobs[jobs[i]];
            const Time start = std::max(t.best[mask], job.release);
            const Time completion = start + instance.p;
            if (completion > job.deadline) {
                continue;
            }
            const std::size_t next = mask | (std::size_t{1} << i);
            if (completion < t.best[next]) {
                t.best[next] = completion;
                t.last[next] = static_cast<std::int8_t>(i);
            }
        }
    }
    return t;
}

}  // namespace

MaxThroughputResult oracle_max_throughput(const Instance& instance) {
    check_instance(instance);
    if (instance.size() > kOracleMaxJobs) {
        throw OracleTooLarge("oracle handles at most " + std::to_string(kOracleMaxJobs) + " jobs, got " +
                             std::to_string(instance.size()));
    }
    std::vector<std::size_t> jobs(instance.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        jobs[i] = i;
    }
    const SubsetTable t = subset_dp(instance, jobs, kNoFloor);

    std::size_t best_mask = 0;
    int best_count = 0;
    for (std::size_t mask = 1; mask < t.best.size(); ++mask) {
        const int count = std::popcount(mask);
        if (t.best[mask] != kInfinity && count > best_count) {
            best_count = count;
            best_mask = mask;
        }
    }

    std::vector<std::size_t> sequence;
    for (std::size_t mask = best_mask; mask != 0;) {
        const auto i = static_cast<std::size_t>(t.last[mask]);
        sequence.push_back(jobs[i]);
        mask &= ~(std::size_t{1} << i);
    }
    std::reverse(sequence.begin(), sequence.end());
    return {static_cast<std::size_t>(best_count), left_shifted(instance, sequence)};
}

Time oracle_b_value(const Instance& instance, std::size_t k, Time alpha, std::size_t u) {
    check_instance(instance);
    if (instance.size() > kOracleBValueMaxJobs) {
        throw OracleTooLarge("oracle_b_value handles at most " + std::to_string(kOracleBValueMaxJobs) +
                             " jobs, got " + std::to_string(instance.size()));
    }
    if (k > instance.size()) {
        throw std::out_of_range("k exceeds the number of jobs");
    }
    std::vector<std::size_t> jobs;
    for (std::size_t j = 0; j < k; ++j) {
        if (instance.jobs[j].release >= alpha) {
            jobs.push_back(j);
        }
    }
    const Time floor = alpha + instance.p;
    if (u == 0) {
        return floor;
    }
    if (u > jobs.size()) {
        return kInfinity;
    }
    const SubsetTable t = subset_dp(instance, jobs, floor);
    Time best = kInfinity;
    for (std::size_t mask = 0; mask < t.best.size(); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) == u) {
            best = std::min(best, t.best[mask]);
        }
    }
    return best;
}

}  // namespace eqsched
