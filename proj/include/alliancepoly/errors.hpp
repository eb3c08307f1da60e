#ifndef ALLIANCEPOLY_ERRORS_HPP
#define ALLIANCEPOLY_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace alliancepoly {

// Error taxonomy mirrors the CLI exit codes: domain 1, parse 2, guard 3,
// internal invariant breach 4.

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(std::uint64_t visited, std::uint64_t limit)
        : std::runtime_error("enumeration guard exceeded: visited " +
                             std::to_string(visited) + " subsets (limit " +
                             std::to_string(limit) + ")"),
          visited_(visited),
          limit_(limit) {}

    std::uint64_t visited() const { return visited_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t visited_;
    std::uint64_t limit_;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace alliancepoly

#endif
