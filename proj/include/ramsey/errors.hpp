#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

// Violated operation precondition or malformed value.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input text could not be parsed. byte/line are 0-based offsets into the input;
// npos means unknown.
class parse_error : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    parse_error(const std::string& what, std::size_t byte_pos = npos, std::size_t line_pos = npos)
        : std::runtime_error(format(what, byte_pos, line_pos)), byte(byte_pos), line(line_pos) {}

    std::size_t byte;
    std::size_t line;

private:
    static std::string format(const std::string& what, std::size_t byte_pos, std::size_t line_pos) {
        std::string s = what;
        if (line_pos != npos) s += " (line " + std::to_string(line_pos + 1) + ")";
        if (byte_pos != npos) s += " (byte " + std::to_string(byte_pos) + ")";
        return s;
    }
};

// A configured work budget ran out before the search could decide. Never a
// statement about the answer.
class budget_exceeded_error : public std::runtime_error {
public:
    explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction would exceed the configured size limits. level_reached is the
// last tower level that was completed, -1 if none.
class size_budget_exceeded_error : public std::runtime_error {
public:
    size_budget_exceeded_error(const std::string& what, int level)
        : std::runtime_error(what), level_reached(level) {}

    int level_reached;
};

// A caller-supplied backing hypergraph fails the girth/independence contract.
class invalid_backing_error : public std::runtime_error {
public:
    explicit invalid_backing_error(const std::string& what) : std::runtime_error(what) {}
};

// Witness extraction could not find a hyperedge inside the focussed set. Only
// possible when the construction ran with a weakened epsilon.
class extraction_failure_error : public std::runtime_error {
public:
    explicit extraction_failure_error(const std::string& what) : std::runtime_error(what) {}
};

// Always-on internal invariant check (never compiled out).
inline void check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("invariant violated: ") + what);
}

}  // namespace ramsey
