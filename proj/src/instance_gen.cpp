#include "eqsched/instance_gen.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace eqsched {

namespace {

// Uniform integer in [lo, hi] by rejection on the raw engine output;
// std::uniform_int_distribution is not specified bit-for-bit.
Time uniform(std::mt19937_64& rng, Time lo, Time hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {
        return lo + static_cast<Time>(rng());
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return lo + static_cast<Time>(draw % span);
}

}  // namespace

Instance gen_fig1() {
    return Instance{2, {{"A", 0, 2}, {"B", 3, 5}, {"C", 1, 7}}};
}

std::size_t JxSpec::ones() const {
    std::size_t c = 0;
    for (bool b : bits) {
        c += b ? 1 : 0;
    }
    return c;
}

Time JxSpec::u(std::size_t i) const {
    return static_cast<Time>(i) * (2 * p + 1);
}

Time JxSpec::v(std::size_t i) const {
    Time out = static_cast<Time>(m()) * (2 * p + 1);
    for (std::size_t j = i; j < m(); ++j) {
        out += p + (p + 1) * (bits[j] ? 1 : 0);
    }
    return out;
}

JxSpec JxSpec::from_bits(const std::string& bits, Time p) {
    JxSpec spec;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain 0 and 1, got '" + bits + "'");
        }
        spec.bits.push_back(c == '1');
    }
    spec.p = p == 0 ? 2 * static_cast<Time>(spec.bits.size()) + 3 : p;
    check_jx_spec(spec);
    return spec;
}

void check_jx_spec(const JxSpec& spec) {
    if (spec.bits.empty()) {
        throw std::invalid_argument("bit string must be non-empty");
    }
    const Time min_p = 2 * static_cast<Time>(spec.m()) + 3;
    if (spec.p < min_p) {
        throw std::invalid_argument("p must be at least 2m + 3 = " + std::to_string(min_p) + ", got " +
                                    std::to_string(spec.p));
    }
}

Instance gen_jx(const JxSpec& spec) {
    check_jx_spec(spec);
    const Time p = spec.p;
    Instance out;
    out.p = p;
    for (std::size_t i = 0; i < spec.m(); ++i) {
        const std::string suffix = std::to_string(i);
        const Time u = spec.u(i);
        const Time v = spec.v(i + 1);
        if (spec.bits[i]) {
            out.jobs.push_back({"A" + suffix, u, v + 2 * p + 1});
            out.jobs.push_back({"B" + suffix, u + 1, v + 2 * p});
            out.jobs.push_back({"C" + suffix, u + p, u + 2 * p});
            out.jobs.push_back({"D" + suffix, u + p + 1, v + p});
        } else {
            out.jobs.push_back({"A" + suffix, u, v + p});
            out.jobs.push_back({"B" + suffix, u + 1, v + 2});
            out.jobs.push_back({"C" + suffix, u + p, u + 2 * p});
            out.jobs.push_back({"D" + suffix, u + p + 1, v + 1});
        }
    }
    return out;
}

Schedule gen_rx(const JxSpec& spec) {
    check_jx_spec(spec);
    const Time p = spec.p;
    Schedule out;
    for (std::size_t i = 0; i < spec.m(); ++i) {
        const std::string suffix = std::to_string(i);
        const Time u = spec.u(i);
        const Time v = spec.v(i + 1);
        if (spec.bits[i]) {
            out.entries.push_back({"A" + suffix, u});
            out.entries.push_back({"C" + suffix, u + p});
            out.entries.push_back({"D" + suffix, v});
            out.entries.push_back({"B" + suffix, v + p});
        } else {
            out.entries.push_back({"B" + suffix, u + 1});
            out.entries.push_back({"D" + suffix, u + p + 1});
            out.entries.push_back({"A" + suffix, v});
        }
    }
    return sorted_by_start(std::move(out));
}

Instance gen_random(const RandomSpec& spec) {
    if (spec.p <= 0) {
        throw std::invalid_argument("p must be positive");
    }
    if (spec.release_max < 0 || spec.slack_max < spec.slack_min) {
        throw std::invalid_argument("empty release or slack range");
    }
    std::mt19937_64 rng(spec.seed);
    const std::size_t width = std::to_string(spec.n == 0 ? 0 : spec.n - 1).size();
    Instance out;
    out.p = spec.p;
    for (std::size_t i = 0; i < spec.n; ++i) {
        std::string index = std::to_string(i);
        const std::string id = "J" + std::string(width - index.size(), '0') + index;
        const Time release = uniform(rng, 0, spec.release_max);
        const Time slack = uniform(rng, spec.slack_min, spec.slack_max);
        out.jobs.push_back({id, release, release + spec.p + slack});
    }
    return out;
}

}  // namespace eqsched
