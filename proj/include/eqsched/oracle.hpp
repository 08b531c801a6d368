#pragma once

// Exponential-time reference solver: dynamic programming over job subsets.
// Every schedule can be made left shifted without losing jobs, and a left
// shifted schedule is fixed by its job order, so the minimal completion time
// of each subset decides everything.

#include <cstddef>
#include <stdexcept>

#include "eqsched/core.hpp"

namespace eqsched {

inline constexpr std::size_t kOracleMaxJobs = 20;
inline constexpr std::size_t kOracleBValueMaxJobs = 12;

class OracleTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Works on any valid instance (normalization not required). Jobs start no
// earlier than their release; there is no global time floor. Throws
// OracleTooLarge above kOracleMaxJobs jobs.
MaxThroughputResult oracle_max_throughput(const Instance& instance);

// Minimal makespan of exactly u jobs drawn from {j <= k : r_j >= alpha}
// (1-based deadline order of a normalized instance), all starting at or after
// alpha + p. kInfinity when impossible. Throws OracleTooLarge above
// kOracleBValueMaxJobs jobs.
Time oracle_b_value(const Instance& instance, std::size_t k, Time alpha, std::size_t u);

}  // namespace eqsched
