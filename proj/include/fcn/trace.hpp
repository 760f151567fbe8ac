#pragma once

#include <string>
#include <vector>

#include "fcn/semantics.hpp"

namespace fcn {

struct ScriptMove {
    enum class Kind { Recv, Pick0, Pick1, Stop, Continue };
    Kind kind;
    Value value;  // Recv

    bool operator==(const ScriptMove&) const = default;
};

struct TraceEvent {
    enum class Kind { Sent, Offered0, Offered1, Halted, More, Result };
    Kind kind;
    Value value;  // Sent, Result

    bool operator==(const TraceEvent&) const = default;

    static TraceEvent sent(Value v) { return {Kind::Sent, std::move(v)}; }
    static TraceEvent result(Value v) { return {Kind::Result, std::move(v)}; }
    static TraceEvent of(Kind k) { return {k, Value::unit()}; }
};

// Walks the right-boundary strategy of a left-closed cell. `depth` bounds the
// number of ^x unfoldings the script may request.
std::vector<TraceEvent> run_trace(const Cell& c, const Value& input, const std::vector<ScriptMove>& script,
                                  const Valuation& val, std::size_t depth);

// One move per line; blank lines and # comments are skipped.
std::vector<ScriptMove> parse_script(const std::string& text);
std::string print_move(const ScriptMove& m);
std::string print_event(const TraceEvent& e);

}  // namespace fcn
