#include "eqsched/legacy_carlier.hpp"

#include <algorithm>

namespace eqsched {

namespace {

struct Sequence {
    std::vector<std::size_t> jobs;
    Time completion = 0;
};

using MaybeSequence = std::optional<Sequence>;

bool contains(const Sequence& s, std::size_t job) {
    return std::find(s.jobs.begin(), s.jobs.end(), job) != s.jobs.end();
}

}  // namespace

LegacyResult run_algorithm1(const Instance& instance) {
    require_normalized(instance);
    const std::size_t n = instance.size();
    const Time p = instance.p;
    const Time d_max = n == 0 ? -1 : instance.max_deadline();
    const std::size_t width = d_max < 0 ? 0 : static_cast<std::size_t>(d_max) + 1;

    // table[k][x], k = 0..n
    std::vector<std::vector<MaybeSequence>> table(n + 1, std::vector<MaybeSequence>(width));
    for (auto& cell : table[0]) {
        cell = Sequence{};
    }

    LegacyResult result;
    for (std::size_t k = 1; k <= n; ++k) {
        for (Time x = p; x <= d_max; ++x) {
            const auto xi = static_cast<std::size_t>(x);
            const MaybeSequence& carry = table[k][xi - 1];
            const MaybeSequence& base = table[k - 1][xi - static_cast<std::size_t>(p)];

            if (!base) {
                table[k][xi] = carry;
                continue;
            }
            std::optional<std::size_t> pick;
            for (std::size_t j = 0; j < n; ++j) {
                // Deadline order, so the first hit is the earliest deadline in H'.
                const Job& job = instance.jobs[j];
                if (job.release + p <= x && job.deadline >= x && !contains(*base, j)) {
                    pick = j;
                    break;
                }
            }
            if (!pick) {
                table[k][xi] = carry;
                continue;
            }
            const Job& m = instance.jobs[*pick];
            const Time start = std::max(base->completion, m.release);
            if (start + p > m.deadline) {
                result.trace.guard_fired.emplace_back(k, x);
                table[k][xi] = carry;
                continue;
            }
            Sequence next = *base;
            next.jobs.push_back(*pick);
            next.completion = start + p;
            table[k][xi] = std::move(next);
        }
    }

    result.trace.d_max = d_max;
    result.trace.rows.resize(n);
    for (std::size_t k = 1; k <= n; ++k) {
        auto& row = result.trace.rows[k - 1];
        row.resize(width);
        for (std::size_t x = 0; x < width; ++x) {
            if (const auto& cell = table[k][x]) {
                std::vector<std::string> ids;
                for (std::size_t j : cell->jobs) {
                    ids.push_back(instance.jobs[j].id);
                }
                row[x] = std::move(ids);
            }
        }
    }

    if (width > 0) {
        for (std::size_t k = n; k >= 1; --k) {
            if (const auto& cell = table[k][width - 1]) {
                result.schedule = left_shifted(instance, cell->jobs);
                break;
            }
        }
    }
    return result;
}

std::string format_trace(const LegacyTrace& trace) {
    bool short_ids = true;
    for (const auto& row : trace.rows) {
        for (const auto& cell : row) {
            if (cell) {
                for (const auto& id : *cell) {
                    short_ids = short_ids && id.size() == 1;
                }
            }
        }
    }
    auto render = [&](const LegacyTrace::Cell& cell) -> std::string {
        if (!cell) {
            return "-";
        }
        std::string out;
        for (std::size_t i = 0; i < cell->size(); ++i) {
            if (i > 0 && !short_ids) {
                out += ',';
            }
            out += (*cell)[i];
        }
        return out.empty() ? "()" : out;
    };

    const std::size_t columns = trace.d_max < 0 ? 0 : static_cast<std::size_t>(trace.d_max) + 1;
    std::vector<std::string> labels{"S^k_x  x="};
    for (std::size_t k = 1; k <= trace.rows.size(); ++k) {
        labels.push_back("k=" + std::to_string(k));
    }
    std::vector<std::vector<std::string>> grid(labels.size(), std::vector<std::string>(columns));
    std::vector<std::size_t> widths(columns, 0);
    for (std::size_t x = 0; x < columns; ++x) {
        grid[0][x] = std::to_string(x);
        for (std::size_t k = 1; k <= trace.rows.size(); ++k) {
            grid[k][x] = render(trace.rows[k - 1][x]);
        }
        for (const auto& line : grid) {
            widths[x] = std::max(widths[x], line[x].size());
        }
    }
    std::size_t label_width = 0;
    for (const auto& l : labels) {
        label_width = std::max(label_width, l.size());
    }

    std::string out;
    for (std::size_t r = 0; r < labels.size(); ++r) {
        std::string line = labels[r] + std::string(label_width - labels[r].size(), ' ');
        for (std::size_t x = 0; x < columns; ++x) {
            line += "  ";
            line += grid[r][x];
            line += std::string(widths[x] - grid[r][x].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace eqsched
