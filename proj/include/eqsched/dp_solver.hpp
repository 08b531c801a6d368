#pragma once

// Exact O(n^5) dynamic program for maximizing the number of on-time jobs.
//
// Jobs are indexed 1..n in deadline order. For a time alpha and counts
// k, u the table holds
//
//   B[k][alpha][u] = minimal makespan of a schedule that runs exactly u jobs
//                    among {j <= k : r_j >= alpha}, all inside [alpha + p, oo)
//
// or +oo when no such schedule exists. B[k][alpha][0] = alpha + p and
// B[k][alpha][u] = +oo for u > k. Layer k follows from layer k - 1: either
// job k is left out, or x jobs run before it, it starts at
// gamma = max(r_k, B[k-1][alpha][x]), and the remaining y = u - 1 - x jobs run
// after it, giving B[k-1][gamma][y].
//
// The table is stored for every alpha in the time grid {r_i + l*p :
// l = -1..n}. Near the top of the grid a makespan (and hence gamma) can land
// outside it; such columns are computed on demand and cached so every grid
// entry holds the exact minimum.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eqsched/core.hpp"

namespace eqsched {

class DPTable {
public:
    // Requires a normalized instance.
    explicit DPTable(const Instance& instance);

    std::size_t job_count() const { return n_; }
    Time p() const { return p_; }
    const TimeGrid& grid() const { return grid_; }

    // B[k][alpha][u]; alpha must be a grid point and k, u <= n. Throws
    // std::out_of_range otherwise. Returns kInfinity for +oo.
    Time value(std::size_t k, Time alpha, std::size_t u) const;

    // Largest u with B[n][-p][u] finite; 0 for an empty instance.
    std::size_t max_count() const;

    // Schedule realizing B[k][alpha][u], left shifted from alpha + p and
    // sorted by start. Throws std::logic_error if the stored choices are
    // inconsistent with the stored values.
    Schedule reconstruct(std::size_t k, Time alpha, std::size_t u) const;

    // Rows `k,alpha,u,beta` for every finite grid entry, k-major.
    std::string dump_csv() const;

    // Number of off-grid columns that had to be materialized.
    std::size_t off_grid_columns() const { return off_grid_.size(); }

private:
    using PointIndex = std::int32_t;
    static constexpr PointIndex kNone = -1;
    static constexpr std::int16_t kExcluded = -1;

    struct Cell {
        PointIndex value = kNone;
        std::int16_t split = kExcluded;
    };

    Time time_of(PointIndex i) const { return points_[static_cast<std::size_t>(i)]; }
    PointIndex intern(Time t);
    bool on_grid(PointIndex i) const { return static_cast<std::size_t>(i) < grid_.size(); }

    std::size_t offset(std::size_t k, PointIndex alpha, std::size_t u) const;
    Cell cell(std::size_t k, PointIndex alpha, std::size_t u) const;
    const std::vector<Cell>& off_grid_column(std::size_t k, PointIndex alpha) const;
    void ensure_off_grid_column(std::size_t k, PointIndex alpha);
    void compute_column(std::size_t k, PointIndex alpha, std::vector<Cell>& out);
    PointIndex gamma_for(std::size_t k, PointIndex prefix_end) const;

    void append_schedule(std::size_t k, PointIndex alpha, std::size_t u,
                         std::vector<std::pair<std::size_t, Time>>& out) const;

    std::size_t n_ = 0;
    Time p_ = 1;
    TimeGrid grid_;
    std::vector<Time> releases_;   // by job position 1..n (index 0 unused)
    std::vector<Time> deadlines_;
    std::vector<PointIndex> release_point_;
    std::vector<std::string> ids_;

    // Grid points first (index == grid index), then interned off-grid times.
    std::vector<Time> points_;
    std::map<Time, PointIndex> extra_points_;

    std::vector<std::size_t> layer_offset_;
    std::vector<Cell> cells_;  // layer k holds |grid| * (k + 1) cells
    std::map<std::pair<std::size_t, PointIndex>, std::vector<Cell>> off_grid_;
};

// Maximum number of jobs that meet their deadlines, with a canonical schedule
// achieving it. Requires a normalized instance.
MaxThroughputResult solve(const Instance& instance);

// B[k][alpha][u] for a freshly built table; see DPTable::value.
Time b_value(const Instance& instance, std::size_t k, Time alpha, std::size_t u);

}  // namespace eqsched
