#include "eqsched/dp_solver.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace eqsched {

DPTable::DPTable(const Instance& instance) {
    require_normalized(instance);
    if (instance.size() > static_cast<std::size_t>(std::numeric_limits<std::int16_t>::max())) {
        throw InvalidInstance("instance too large for the dynamic program");
    }
    n_ = instance.size();
    p_ = instance.p;
    grid_ = build_time_grid(instance);
    if (grid_.size() >= static_cast<std::size_t>(std::numeric_limits<PointIndex>::max() / 2)) {
        throw InvalidInstance("time grid too large");
    }

    releases_.assign(n_ + 1, 0);
    deadlines_.assign(n_ + 1, 0);
    release_point_.assign(n_ + 1, kNone);
    ids_.assign(n_ + 1, {});
    points_.assign(grid_.points().begin(), grid_.points().end());
    for (std::size_t k = 1; k <= n_; ++k) {
        const Job& job = instance.jobs[k - 1];
        releases_[k] = job.release;
        deadlines_[k] = job.deadline;
        release_point_[k] = static_cast<PointIndex>(*grid_.index_of(job.release));
        ids_[k] = job.id;
    }

    const std::size_t g = grid_.size();
    layer_offset_.resize(n_ + 2);
    for (std::size_t k = 0; k <= n_ + 1; ++k) {
        layer_offset_[k] = g * (k * (k + 1) / 2);
    }
    cells_.resize(layer_offset_[n_ + 1]);

    std::vector<Cell> scratch;
    for (std::size_t k = 0; k <= n_; ++k) {
        scratch.assign(k + 1, Cell{});
        for (std::size_t a = 0; a < g; ++a) {
            const auto alpha = static_cast<PointIndex>(a);
            compute_column(k, alpha, scratch);
            std::copy(scratch.begin(), scratch.end(), cells_.begin() + static_cast<std::ptrdiff_t>(offset(k, alpha, 0)));
        }
    }
}

DPTable::PointIndex DPTable::intern(Time t) {
    if (const auto i = grid_.index_of(t)) {
        return static_cast<PointIndex>(*i);
    }
    const auto [it, inserted] = extra_points_.try_emplace(t, static_cast<PointIndex>(points_.size()));
    if (inserted) {
        points_.push_back(t);
    }
    return it->second;
}

std::size_t DPTable::offset(std::size_t k, PointIndex alpha, std::size_t u) const {
    return layer_offset_[k] + static_cast<std::size_t>(alpha) * (k + 1) + u;
}

DPTable::Cell DPTable::cell(std::size_t k, PointIndex alpha, std::size_t u) const {
    if (u > k) {
        return {};
    }
    if (on_grid(alpha)) {
        return cells_[offset(k, alpha, u)];
    }
    return off_grid_column(k, alpha)[u];
}

const std::vector<DPTable::Cell>& DPTable::off_grid_column(std::size_t k, PointIndex alpha) const {
    const auto it = off_grid_.find({k, alpha});
    if (it == off_grid_.end()) {
        throw std::logic_error("dp table: off-grid column at time " + std::to_string(time_of(alpha)) +
                               " was never computed");
    }
    return it->second;
}

void DPTable::ensure_off_grid_column(std::size_t k, PointIndex alpha) {
    if (off_grid_.contains({k, alpha})) {
        return;
    }
    if (k > 0) {
        ensure_off_grid_column(k - 1, alpha);
    }
    std::vector<Cell> column(k + 1);
    compute_column(k, alpha, column);
    off_grid_.emplace(std::pair{k, alpha}, std::move(column));
}

DPTable::PointIndex DPTable::gamma_for(std::size_t k, PointIndex prefix_end) const {
    return time_of(prefix_end) >= releases_[k] ? prefix_end : release_point_[k];
}

void DPTable::compute_column(std::size_t k, PointIndex alpha, std::vector<Cell>& out) {
    out[0] = {intern(time_of(alpha) + p_), kExcluded};
    // Job k may only be used when it belongs to {j : r_j >= alpha}.
    const bool k_eligible = k > 0 && releases_[k] >= time_of(alpha);
    for (std::size_t u = 1; u <= k; ++u) {
        Cell best{cell(k - 1, alpha, u).value, kExcluded};
        for (std::size_t x = 0; k_eligible && x < u; ++x) {
            // B[k-1][alpha][x] is nondecreasing in x, so gamma is too.
            const PointIndex prefix_end = cell(k - 1, alpha, x).value;
            if (prefix_end == kNone) {
                break;
            }
            const PointIndex gamma = gamma_for(k, prefix_end);
            if (time_of(gamma) + p_ > deadlines_[k]) {
                break;
            }
            if (!on_grid(gamma)) {
                ensure_off_grid_column(k - 1, gamma);
            }
            const PointIndex beta = cell(k - 1, gamma, u - 1 - x).value;
            if (beta != kNone && (best.value == kNone || time_of(beta) < time_of(best.value))) {
                best = {beta, static_cast<std::int16_t>(x)};
            }
        }
        out[u] = best;
    }
}

Time DPTable::value(std::size_t k, Time alpha, std::size_t u) const {
    if (k > n_ || u > n_) {
        throw std::out_of_range("dp table: k and u must be at most n = " + std::to_string(n_));
    }
    const auto a = grid_.index_of(alpha);
    if (!a) {
        throw std::out_of_range("dp table: " + std::to_string(alpha) + " is not a grid point");
    }
    const Cell c = cell(k, static_cast<PointIndex>(*a), u);
    return c.value == kNone ? kInfinity : time_of(c.value);
}

std::size_t DPTable::max_count() const {
    if (n_ == 0) {
        return 0;
    }
    const auto top = static_cast<PointIndex>(*grid_.index_of(-p_));
    std::size_t best = 0;
    for (std::size_t u = 1; u <= n_; ++u) {
        if (cell(n_, top, u).value != kNone) {
            best = u;
        }
    }
    return best;
}

void DPTable::append_schedule(std::size_t k, PointIndex alpha, std::size_t u,
                              std::vector<std::pair<std::size_t, Time>>& out) const {
    if (u == 0) {
        return;
    }
    const Cell c = cell(k, alpha, u);
    if (c.value == kNone) {
        throw std::logic_error("dp table: reconstructing an infinite entry");
    }
    if (c.split == kExcluded) {
        append_schedule(k - 1, alpha, u, out);
        return;
    }
    const auto x = static_cast<std::size_t>(c.split);
    append_schedule(k - 1, alpha, x, out);
    const PointIndex prefix_end = cell(k - 1, alpha, x).value;
    if (prefix_end == kNone) {
        throw std::logic_error("dp table: split points at an infinite prefix");
    }
    const PointIndex gamma = gamma_for(k, prefix_end);
    out.emplace_back(k, time_of(gamma));
    append_schedule(k - 1, gamma, u - 1 - x, out);
}

Schedule DPTable::reconstruct(std::size_t k, Time alpha, std::size_t u) const {
    const Time expected = value(k, alpha, u);
    if (expected == kInfinity) {
        throw std::logic_error("dp table: no schedule for the requested entry");
    }
    std::vector<std::pair<std::size_t, Time>> picked;
    append_schedule(k, static_cast<PointIndex>(*grid_.index_of(alpha)), u, picked);

    Schedule out;
    Time previous_end = alpha + p_;
    for (const auto& [job, start] : picked) {
        if (start < previous_end) {
            throw std::logic_error("dp table: reconstructed jobs overlap");
        }
        out.entries.push_back({ids_[job], start});
        previous_end = start + p_;
    }
    if (out.size() != u || (u > 0 && previous_end != expected)) {
        throw std::logic_error("dp table: reconstruction disagrees with the stored makespan");
    }
    return out;
}

std::string DPTable::dump_csv() const {
    std::string out = "k,alpha,u,beta\n";
    for (std::size_t k = 0; k <= n_; ++k) {
        for (std::size_t a = 0; a < grid_.size(); ++a) {
            for (std::size_t u = 0; u <= k; ++u) {
                const Cell c = cells_[offset(k, static_cast<PointIndex>(a), u)];
                if (c.value == kNone) {
                    continue;
                }
                out += std::to_string(k) + "," + std::to_string(grid_[a]) + "," + std::to_string(u) + "," +
                       std::to_string(time_of(c.value)) + "\n";
            }
        }
    }
    return out;
}

MaxThroughputResult solve(const Instance& instance) {
    require_normalized(instance);
    if (instance.empty()) {
        return {};
    }
    const DPTable table(instance);
    MaxThroughputResult result;
    result.count = table.max_count();
    const Schedule raw = table.reconstruct(table.job_count(), -instance.p, result.count);
    if (const auto v = validate_schedule(instance, raw); !v.ok()) {
        throw std::logic_error("dp solver produced an invalid schedule: " + v.message);
    }
    result.schedule = canonicalize(instance, raw);
    if (result.schedule.size() != result.count) {
        throw std::logic_error("dp solver: schedule size differs from the optimal count");
    }
    return result;
}

Time b_value(const Instance& instance, std::size_t k, Time alpha, std::size_t u) {
    return DPTable(instance).value(k, alpha, u);
}

}  // namespace eqsched
