#pragma once

// Line-oriented text formats for instances and schedules.
//
//   # comment
//   p 2
//   job A 0 2
//
//   sched A 0
//
// Emitters write single spaces and a trailing newline so outputs are
// byte-stable.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eqsched/core.hpp"

namespace eqsched {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);

    // 1-based; 0 when the error is not tied to a line.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Jobs are kept in file order; call normalize() before solving.
Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& instance);

// Accepts an optional leading `count <n>` line, which must match the number
// of `sched` lines.
Schedule parse_schedule(std::string_view text);

// Entries in (start, id) order.
std::string emit_schedule(const Schedule& schedule);

}  // namespace eqsched
