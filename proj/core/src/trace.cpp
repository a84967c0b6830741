#include "mwpm/trace.hpp"

#include <cstdlib>
#include <ostream>

namespace mwpm {

void Trace::event(Weight t, const char* kind, const std::string& detail, TraceLevel at) {
    if (!enabled(at)) return;
    *out_ << "t=" << t << ' ' << kind;
    if (!detail.empty()) *out_ << ' ' << detail;
    *out_ << '\n';
}

void Trace::note(const std::string& line, TraceLevel at) {
    if (!enabled(at)) return;
    *out_ << line << '\n';
}

TraceLevel trace_level_from_env() {
    const char* v = std::getenv("MATCH_LOG");
    if (v == nullptr) return TraceLevel::None;
    std::string s(v);
    if (s == "1") return TraceLevel::Augment;
    if (s == "2") return TraceLevel::All;
    return TraceLevel::None;
}

}  // namespace mwpm
