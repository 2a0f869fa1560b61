#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "activelogic/status.hpp"

namespace activelogic {

struct TraceEvent {
    std::uint64_t tick = 0;
    std::string node;
    Status status;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Flat per-tick evaluation history. Events are appended in evaluation
/// order; a node records its event once its own status is known.
class Trace {
public:
    void set_tick(std::uint64_t tick) noexcept { tick_ = tick; }
    std::uint64_t tick() const noexcept { return tick_; }

    void record(std::string_view node, Status status) {
        events_.push_back(TraceEvent{tick_, std::string(node), status});
    }

    const std::vector<TraceEvent>& events() const noexcept { return events_; }
    std::vector<TraceEvent> take() noexcept { return std::move(events_); }
    void clear() noexcept { events_.clear(); }

private:
    std::uint64_t tick_ = 0;
    std::vector<TraceEvent> events_;
};

enum class TraceFormat { text, jsonl };

/// `tick<TAB>node<TAB>F|U|T`
inline std::string to_text_line(const TraceEvent& e) {
    std::string line = std::to_string(e.tick);
    line += '\t';
    line += e.node;
    line += '\t';
    line += e.status.symbol();
    return line;
}

inline std::string to_jsonl_line(const TraceEvent& e) {
    nlohmann::json j;
    j["tick"] = e.tick;
    j["node"] = e.node;
    j["status"] = std::string(1, e.status.symbol());
    return j.dump();
}

inline void write_trace(std::ostream& os, const std::vector<TraceEvent>& events, TraceFormat format) {
    for (const auto& e : events)
        os << (format == TraceFormat::text ? to_text_line(e) : to_jsonl_line(e)) << '\n';
}

} // namespace activelogic
