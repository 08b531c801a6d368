#include "eqsched/text_format.hpp"

#include <charconv>
#include <optional>
#include <unordered_set>
#include <vector>

namespace eqsched {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > begin) {
            out.push_back(line.substr(begin, i - begin));
        }
    }
    return out;
}

Time parse_int(std::string_view field, std::size_t line, const char* what) {
    Time value = 0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line, std::string(what) + " out of range: '" + std::string(field) + "'");
    }
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, std::string(what) + " is not an integer: '" + std::string(field) + "'");
    }
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') {
            continue;
        }
        fn(line_no, fields);
    }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

Instance parse_instance(std::string_view text) {
    Instance out;
    bool have_p = false;
    std::unordered_set<std::string> ids;
    for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& f) {
        if (f[0] == "p") {
            if (f.size() != 2) {
                throw ParseError(line, "expected 'p <int>'");
            }
            if (have_p) {
                throw ParseError(line, "duplicate 'p' line");
            }
            out.p = parse_int(f[1], line, "processing time");
            if (out.p <= 0) {
                throw ParseError(line, "processing time must be positive");
            }
            have_p = true;
        } else if (f[0] == "job") {
            if (f.size() != 4) {
                throw ParseError(line, "expected 'job <id> <release> <deadline>'");
            }
            if (!have_p) {
                throw ParseError(line, "'p' line must precede jobs");
            }
            Job j{std::string(f[1]), parse_int(f[2], line, "release"), parse_int(f[3], line, "deadline")};
            if (!ids.insert(j.id).second) {
                throw ParseError(line, "duplicate job id '" + j.id + "'");
            }
            out.jobs.push_back(std::move(j));
        } else {
            throw ParseError(line, "unknown directive '" + std::string(f[0]) + "'");
        }
    });
    if (!have_p) {
        throw ParseError(0, "missing 'p' line");
    }
    return out;
}

std::string emit_instance(const Instance& instance) {
    std::string out = "p " + std::to_string(instance.p) + "\n";
    for (const auto& j : instance.jobs) {
        out += "job " + j.id + " " + std::to_string(j.release) + " " + std::to_string(j.deadline) + "\n";
    }
    return out;
}

Schedule parse_schedule(std::string_view text) {
    Schedule out;
    std::optional<std::pair<std::size_t, Time>> declared;
    for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& f) {
        if (f[0] == "count") {
            if (f.size() != 2) {
                throw ParseError(line, "expected 'count <int>'");
            }
            if (declared || !out.empty()) {
                throw ParseError(line, "'count' must be the first directive");
            }
            declared = {line, parse_int(f[1], line, "count")};
        } else if (f[0] == "sched") {
            if (f.size() != 3) {
                throw ParseError(line, "expected 'sched <id> <start>'");
            }
            out.entries.push_back({std::string(f[1]), parse_int(f[2], line, "start")});
        } else {
            throw ParseError(line, "unknown directive '" + std::string(f[0]) + "'");
        }
    });
    if (declared && declared->second != static_cast<Time>(out.size())) {
        throw ParseError(declared->first, "count " + std::to_string(declared->second) + " does not match " +
                                              std::to_string(out.size()) + " sched lines");
    }
    return out;
}

std::string emit_schedule(const Schedule& schedule) {
    std::string out;
    for (const auto& e : sorted_by_start(schedule).entries) {
        out += "sched " + e.job + " " + std::to_string(e.start) + "\n";
    }
    return out;
}

}  // namespace eqsched
