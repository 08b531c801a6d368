#pragma once

// Data model for single-machine scheduling of equal-length jobs with
// release times and deadlines: instances, schedules, validation,
// canonical form and the candidate time grid.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqsched {

using Time = std::int64_t;

// Sentinel for "no schedule exists"; never a valid time.
inline constexpr Time kInfinity = std::numeric_limits<Time>::max();

struct Job {
    std::string id;
    Time release = 0;
    Time deadline = 0;

    friend bool operator==(const Job&, const Job&) = default;
};

// A job set with one common processing time. Jobs are kept in the order
// they were supplied; normalize() produces the deadline-sorted form all
// solvers expect.
struct Instance {
    Time p = 1;
    std::vector<Job> jobs;

    std::size_t size() const { return jobs.size(); }
    bool empty() const { return jobs.empty(); }

    // Latest deadline, or 0 for an empty instance.
    Time max_deadline() const;

    std::optional<std::size_t> find(std::string_view id) const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidSchedule : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws InvalidInstance on p <= 0 or duplicate job ids.
void check_instance(const Instance& instance);

struct ScheduledJob {
    std::string job;
    Time start = 0;

    friend bool operator==(const ScheduledJob&, const ScheduledJob&) = default;
};

// Ordered sequence of (job, start time). Solvers emit entries sorted by
// start; validate_schedule() accepts any order.
struct Schedule {
    std::vector<ScheduledJob> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    bool contains(std::string_view job) const;
    std::vector<std::string> job_sequence() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Latest completion time C(S); 0 for the empty schedule.
Time makespan(const Schedule& schedule, Time p);

// Entries sorted by (start, id).
Schedule sorted_by_start(Schedule schedule);

// Adds `offset` to every start time.
Schedule shift(const Schedule& schedule, Time offset);

// Left-shifted schedule that runs `sequence` (indices into instance.jobs)
// in the given order. No deadline checking.
Schedule left_shifted(const Instance& instance, std::span<const std::size_t> sequence);

struct MaxThroughputResult {
    std::size_t count = 0;
    Schedule schedule;
};

struct Normalized {
    Instance instance;
    Time offset = 0;  // original time = normalized time + offset
};

// Shifts releases and deadlines so that the earliest release is 0 and sorts
// jobs by (deadline, id). Throws InvalidInstance on p <= 0, duplicate ids or
// arithmetic overflow.
Normalized normalize(const Instance& instance);

bool is_normalized(const Instance& instance);

// Throws InvalidInstance unless `instance` is normalized.
void require_normalized(const Instance& instance);

// Position of each job in (deadline, id) order.
std::vector<std::size_t> deadline_ranks(const Instance& instance);

enum class Violation {
    none,
    unknown_job,
    duplicate_job,
    before_release,
    after_deadline,
    overlap,
};

std::string_view to_string(Violation v);

struct ValidationResult {
    Violation violation = Violation::none;
    std::string job;
    std::string message;

    bool ok() const { return violation == Violation::none; }
};

// Per-entry checks run in entry order (unknown, duplicate, release,
// deadline), then pairwise overlap in start order. Reports the first
// violation found.
ValidationResult validate_schedule(const Instance& instance, const Schedule& schedule);

// (c1) every job starts at its release or at the previous completion, and
// (c2) if i runs before j then i starts before r_j or i precedes j in
// deadline order.
bool is_left_shifted(const Instance& instance, const Schedule& schedule);
bool is_earliest_deadline(const Instance& instance, const Schedule& schedule);
bool is_canonical(const Instance& instance, const Schedule& schedule);

// Swaps order-violating pairs until earliest-deadline holds, then left
// shifts. Output keeps the job set and is sorted by start. Throws
// InvalidSchedule if the input does not validate.
Schedule canonicalize(const Instance& instance, const Schedule& schedule);

// S (+) m: appends job `job` at max(C(S), r_m). Throws InvalidSchedule if the
// job is unknown, already scheduled, or would miss its deadline.
Schedule extend(const Instance& instance, const Schedule& schedule, std::string_view job);

// Candidate times {r_i + l*p : l = -1..n}, sorted and deduplicated.
class TimeGrid {
public:
    TimeGrid() = default;
    explicit TimeGrid(std::vector<Time> points);

    std::span<const Time> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    Time operator[](std::size_t i) const { return points_[i]; }

    std::optional<std::size_t> index_of(Time t) const;
    bool contains(Time t) const { return index_of(t).has_value(); }

private:
    std::vector<Time> points_;
};

TimeGrid build_time_grid(const Instance& instance);

}  // namespace eqsched
