#pragma once

#include <iosfwd>
#include <string>

#include "mwpm/types.hpp"

namespace mwpm {

enum class TraceLevel { None = 0, Augment = 1, All = 2 };

// Line-oriented event log: "t=<time> <KIND> <detail>".
class Trace {
public:
    Trace() = default;
    Trace(std::ostream* out, TraceLevel level) : out_(out), level_(level) {}

    bool enabled(TraceLevel at) const { return out_ != nullptr && static_cast<int>(level_) >= static_cast<int>(at); }
    void event(Weight t, const char* kind, const std::string& detail, TraceLevel at = TraceLevel::All);
    void note(const std::string& line, TraceLevel at = TraceLevel::All);

private:
    std::ostream* out_ = nullptr;
    TraceLevel level_ = TraceLevel::None;
};

// Reads MATCH_LOG (0, 1 or 2); unset or malformed means None.
TraceLevel trace_level_from_env();

}  // namespace mwpm
