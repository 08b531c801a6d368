#include "eqsched/core.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace eqsched {

namespace {

Time checked_sub(Time a, Time b) {
    Time out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw InvalidInstance("time arithmetic overflow");
    }
    return out;
}

Time checked_add(Time a, Time b) {
    Time out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw InvalidInstance("time arithmetic overflow");
    }
    return out;
}

Time checked_mul(Time a, Time b) {
    Time out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw InvalidInstance("time arithmetic overflow");
    }
    return out;
}

bool deadline_less(const Job& a, const Job& b) {
    if (a.deadline != b.deadline) {
        return a.deadline < b.deadline;
    }
    return a.id < b.id;
}

// Job indices of the schedule entries in (start, id) order. Assumes every
// entry names a job of the instance.
std::vector<std::size_t> indices_by_start(const Instance& instance, const Schedule& schedule) {
    const Schedule sorted = sorted_by_start(schedule);
    std::vector<std::size_t> out;
    out.reserve(sorted.size());
    for (const auto& e : sorted.entries) {
        out.push_back(*instance.find(e.job));
    }
    return out;
}

}  // namespace

Time Instance::max_deadline() const {
    Time d = 0;
    bool first = true;
    for (const auto& j : jobs) {
        if (first || j.deadline > d) {
            d = j.deadline;
            first = false;
        }
    }
    return d;
}

std::optional<std::size_t> Instance::find(std::string_view id) const {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (jobs[i].id == id) {
            return i;
        }
    }
    return std::nullopt;
}

void check_instance(const Instance& instance) {
    if (instance.p <= 0) {
        throw InvalidInstance("processing time must be positive, got " + std::to_string(instance.p));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& j : instance.jobs) {
        if (j.id.empty()) {
            throw InvalidInstance("empty job id");
        }
        if (!seen.insert(j.id).second) {
            throw InvalidInstance("duplicate job id '" + j.id + "'");
        }
    }
}

bool Schedule::contains(std::string_view job) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const ScheduledJob& e) { return e.job == job; });
}

std::vector<std::string> Schedule::job_sequence() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        out.push_back(e.job);
    }
    return out;
}

Time makespan(const Schedule& schedule, Time p) {
    Time c = 0;
    for (const auto& e : schedule.entries) {
        c = std::max(c, e.start + p);
    }
    return c;
}

Schedule sorted_by_start(Schedule schedule) {
    std::stable_sort(schedule.entries.begin(), schedule.entries.end(),
                     [](const ScheduledJob& a, const ScheduledJob& b) {
                         if (a.start != b.start) {
                             return a.start < b.start;
                         }
                         return a.job < b.job;
                     });
    return schedule;
}

Schedule shift(const Schedule& schedule, Time offset) {
    Schedule out = schedule;
    for (auto& e : out.entries) {
        e.start += offset;
    }
    return out;
}

Schedule left_shifted(const Instance& instance, std::span<const std::size_t> sequence) {
    Schedule out;
    out.entries.reserve(sequence.size());
    bool first = true;
    Time completion = 0;
    for (std::size_t idx : sequence) {
        const Job& j = instance.jobs[idx];
        const Time start = first ? j.release : std::max(completion, j.release);
        out.entries.push_back({j.id, start});
        completion = start + instance.p;
        first = false;
    }
    return out;
}

Normalized normalize(const Instance& instance) {
    check_instance(instance);
    Normalized out;
    out.instance.p = instance.p;
    out.instance.jobs = instance.jobs;
    if (!instance.jobs.empty()) {
        Time min_release = instance.jobs.front().release;
        for (const auto& j : instance.jobs) {
            min_release = std::min(min_release, j.release);
        }
        for (auto& j : out.instance.jobs) {
            j.release = checked_sub(j.release, min_release);
            j.deadline = checked_sub(j.deadline, min_release);
        }
        out.offset = min_release;
    }
    std::stable_sort(out.instance.jobs.begin(), out.instance.jobs.end(), deadline_less);
    return out;
}

bool is_normalized(const Instance& instance) {
    if (instance.p <= 0) {
        return false;
    }
    if (instance.jobs.empty()) {
        return true;
    }
    Time min_release = instance.jobs.front().release;
    for (std::size_t i = 0; i < instance.jobs.size(); ++i) {
        min_release = std::min(min_release, instance.jobs[i].release);
        if (i > 0 && !deadline_less(instance.jobs[i - 1], instance.jobs[i])) {
            return false;
        }
    }
    return min_release == 0;
}

void require_normalized(const Instance& instance) {
    check_instance(instance);
    if (!is_normalized(instance)) {
        throw InvalidInstance("instance must be normalized (min release 0, sorted by deadline)");
    }
}

std::vector<std::size_t> deadline_ranks(const Instance& instance) {
    std::vector<std::size_t> order(instance.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return deadline_less(instance.jobs[a], instance.jobs[b]);
    });
    std::vector<std::size_t> rank(instance.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        rank[order[pos]] = pos;
    }
    return rank;
}

std::string_view to_string(Violation v) {
    switch (v) {
    case Violation::none: return "ok";
    case Violation::unknown_job: return "unknown job";
    case Violation::duplicate_job: return "duplicate job";
    case Violation::before_release: return "starts before release";
    case Violation::after_deadline: return "completes after deadline";
    case Violation::overlap: return "overlap";
    }
    return "?";
}

ValidationResult validate_schedule(const Instance& instance, const Schedule& schedule) {
    auto fail = [](Violation v, const std::string& job, std::string detail) {
        return ValidationResult{v, job, std::string(to_string(v)) + ": " + job + " " + std::move(detail)};
    };
    std::unordered_set<std::string_view> seen;
    for (const auto& e : schedule.entries) {
        const auto idx = instance.find(e.job);
        if (!idx) {
            return fail(Violation::unknown_job, e.job, "is not in the instance");
        }
        if (!seen.insert(e.job).second) {
            return fail(Violation::duplicate_job, e.job, "is scheduled twice");
        }
        const Job& j = instance.jobs[*idx];
        if (e.start < j.release) {
            return fail(Violation::before_release, e.job,
                        "starts at " + std::to_string(e.start) + " < release " + std::to_string(j.release));
        }
        if (e.start + instance.p > j.deadline) {
            return fail(Violation::after_deadline, e.job,
                        "completes at " + std::to_string(e.start + instance.p) + " > deadline " +
                            std::to_string(j.deadline));
        }
    }
    const Schedule sorted = sorted_by_start(schedule);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const auto& prev = sorted.entries[i - 1];
        const auto& cur = sorted.entries[i];
        if (cur.start < prev.start + instance.p) {
            return fail(Violation::overlap, cur.job,
                        "starts at " + std::to_string(cur.start) + " while " + prev.job + " runs until " +
                            std::to_string(prev.start + instance.p));
        }
    }
    return {};
}

bool is_left_shifted(const Instance& instance, const Schedule& schedule) {
    const Schedule sorted = sorted_by_start(schedule);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto idx = instance.find(sorted.entries[i].job);
        if (!idx) {
            return false;
        }
        const Time start = sorted.entries[i].start;
        const bool at_release = start == instance.jobs[*idx].release;
        const bool after_previous = i > 0 && start == sorted.entries[i - 1].start + instance.p;
        if (!at_release && !after_previous) {
            return false;
        }
    }
    return true;
}

bool is_earliest_deadline(const Instance& instance, const Schedule& schedule) {
    const Schedule sorted = sorted_by_start(schedule);
    const auto rank = deadline_ranks(instance);
    std::vector<std::size_t> idx;
    for (const auto& e : sorted.entries) {
        const auto i = instance.find(e.job);
        if (!i) {
            return false;
        }
        idx.push_back(*i);
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const bool before_release = sorted.entries[a].start < instance.jobs[idx[b]].release;
            if (!before_release && rank[idx[a]] > rank[idx[b]]) {
                return false;
            }
        }
    }
    return true;
}

bool is_canonical(const Instance& instance, const Schedule& schedule) {
    return is_left_shifted(instance, schedule) && is_earliest_deadline(instance, schedule);
}

Schedule canonicalize(const Instance& instance, const Schedule& schedule) {
    if (const auto v = validate_schedule(instance, schedule); !v.ok()) {
        throw InvalidSchedule("cannot canonicalize an invalid schedule: " + v.message);
    }
    const auto rank = deadline_ranks(instance);
    std::vector<std::size_t> jobs = indices_by_start(instance, schedule);
    std::vector<Time> slots;
    for (const auto& e : sorted_by_start(schedule).entries) {
        slots.push_back(e.start);
    }

    // Each swap removes at least one deadline inversion, so this terminates.
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t a = 0; a < jobs.size() && !swapped; ++a) {
            for (std::size_t b = a + 1; b < jobs.size(); ++b) {
                if (rank[jobs[a]] > rank[jobs[b]] && slots[a] >= instance.jobs[jobs[b]].release) {
                    std::swap(jobs[a], jobs[b]);
                    swapped = true;
                    break;
                }
            }
        }
    }
    return left_shifted(instance, jobs);
}

Schedule extend(const Instance& instance, const Schedule& schedule, std::string_view job) {
    const auto idx = instance.find(job);
    if (!idx) {
        throw InvalidSchedule("unknown job '" + std::string(job) + "'");
    }
    if (schedule.contains(job)) {
        throw InvalidSchedule("job '" + std::string(job) + "' is already scheduled");
    }
    const Job& m = instance.jobs[*idx];
    const Time start = std::max(makespan(schedule, instance.p), m.release);
    if (start + instance.p > m.deadline) {
        throw InvalidSchedule("extension by '" + m.id + "' completes at " + std::to_string(start + instance.p) +
                              " after its deadline " + std::to_string(m.deadline));
    }
    Schedule out = schedule;
    out.entries.push_back({m.id, start});
    return out;
}

TimeGrid::TimeGrid(std::vector<Time> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::optional<std::size_t> TimeGrid::index_of(Time t) const {
    const auto it = std::lower_bound(points_.begin(), points_.end(), t);
    if (it == points_.end() || *it != t) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - points_.begin());
}

TimeGrid build_time_grid(const Instance& instance) {
    const Time n = static_cast<Time>(instance.size());
    std::vector<Time> points;
    points.reserve(instance.size() * (instance.size() + 2));
    for (const auto& j : instance.jobs) {
        for (Time l = -1; l <= n; ++l) {
            points.push_back(checked_add(j.release, checked_mul(l, instance.p)));
        }
    }
    return TimeGrid(std::move(points));
}

}  // namespace eqsched
