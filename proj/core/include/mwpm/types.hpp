#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace mwpm {

using Weight = std::int64_t;

inline constexpr int kNone = -1;
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

// Malformed input file or command line value.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The solver detected a state that its invariants rule out.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The input graph has no perfect matching.
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MWPM_REQUIRE(cond, msg)                                  \
    do {                                                         \
        if (!(cond)) throw ::mwpm::ContractViolation(msg);       \
    } while (0)

#define MWPM_CHECK(cond, msg)                                    \
    do {                                                         \
        if (!(cond)) throw ::mwpm::InvariantViolation(msg);      \
    } while (0)

}  // namespace mwpm
