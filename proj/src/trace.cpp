#include "fcn/trace.hpp"

#include <sstream>

#include "fcn/syntax.hpp"

namespace fcn {

namespace {

const char* move_kind(ScriptMove::Kind k) {
    switch (k) {
        case ScriptMove::Kind::Recv: return "recv";
        case ScriptMove::Kind::Pick0:
        case ScriptMove::Kind::Pick1: return "pick";
        case ScriptMove::Kind::Stop:
        case ScriptMove::Kind::Continue: return "stop/continue";
    }
    return "?";
}

class Walker {
public:
    Walker(const std::vector<ScriptMove>& script, std::size_t depth) : script_(script), depth_(depth) {}

    std::vector<TraceEvent> run(PV p, const Proto& right) {
        std::vector<Proto> stack{fold_stars(right)};
        while (true) {
            if (stack.empty()) {
                if (p->kind != PNode::Kind::Leaf) throw Error(ErrorKind::Internal, "trace ended on a non-leaf");
                out_.push_back(TraceEvent::result(Value::tuple(p->factors)));
                if (next_ < script_.size()) {
                    throw Error(ErrorKind::ScriptOverrun,
                                std::to_string(script_.size() - next_) + " unused move(s), first: " +
                                    print_move(script_[next_]));
                }
                return out_;
            }
            Proto h = stack.back();
            stack.pop_back();
            switch (h.kind) {
                case Proto::Kind::Done:
                    break;
                case Proto::Kind::Seq:
                    for (auto it = h.parts.rbegin(); it != h.parts.rend(); ++it) stack.push_back(*it);
                    break;
                case Proto::Kind::Send:
                    out_.push_back(TraceEvent::sent(p->value));
                    p = p->next;
                    break;
                case Proto::Kind::Recv: {
                    const ScriptMove& m = take("recv");
                    if (m.kind != ScriptMove::Kind::Recv) wrong("recv", m);
                    PV found;
                    for (const auto& [k, v] : p->table) {
                        if (k == m.value) found = v;
                    }
                    if (!found) {
                        throw Error(ErrorKind::WrongMove, "recv " + print_value(m.value) + " is not a value of " +
                                                              print_obj(h.obj));
                    }
                    p = found;
                    break;
                }
                case Proto::Kind::Choose: {
                    const ScriptMove& m = take("pick");
                    if (m.kind == ScriptMove::Kind::Pick0) {
                        p = p->first->get();
                        stack.push_back(h.parts[0]);
                    } else if (m.kind == ScriptMove::Kind::Pick1) {
                        p = p->second->get();
                        stack.push_back(h.parts[1]);
                    } else {
                        wrong("pick", m);
                    }
                    break;
                }
                case Proto::Kind::Offer:
                    if (p->kind == PNode::Kind::Left) {
                        out_.push_back(TraceEvent::of(TraceEvent::Kind::Offered0));
                        stack.push_back(h.parts[0]);
                    } else {
                        out_.push_back(TraceEvent::of(TraceEvent::Kind::Offered1));
                        stack.push_back(h.parts[1]);
                    }
                    p = p->next;
                    break;
                case Proto::Kind::StarP:
                    if (p->kind == PNode::Kind::Left) {
                        out_.push_back(TraceEvent::of(TraceEvent::Kind::Halted));
                    } else {
                        out_.push_back(TraceEvent::of(TraceEvent::Kind::More));
                        stack.push_back(h);
                        stack.push_back(h.parts[0]);
                    }
                    p = p->next;
                    break;
                case Proto::Kind::StarX: {
                    const ScriptMove& m = take("stop/continue");
                    if (m.kind == ScriptMove::Kind::Stop) {
                        p = p->first->get();
                    } else if (m.kind == ScriptMove::Kind::Continue) {
                        if (++unfolded_ > depth_) {
                            throw Error(ErrorKind::DepthExceeded,
                                        "more than " + std::to_string(depth_) + " ^x unfoldings requested");
                        }
                        p = p->second->get();
                        stack.push_back(h);
                        stack.push_back(h.parts[0]);
                    } else {
                        wrong("stop/continue", m);
                    }
                    break;
                }
            }
        }
    }

private:
    const ScriptMove& take(const char* expected) {
        if (next_ >= script_.size()) {
            throw Error(ErrorKind::ScriptUnderrun, std::string("script ended where a ") + expected +
                                                       " move was needed");
        }
        return script_[next_++];
    }

    [[noreturn]] void wrong(const char* expected, const ScriptMove& got) {
        throw Error(ErrorKind::WrongMove, std::string("expected ") + expected + ", got " + move_kind(got.kind) +
                                              " (move " + std::to_string(next_) + ")");
    }

    const std::vector<ScriptMove>& script_;
    std::size_t depth_;
    std::size_t next_ = 0;
    std::size_t unfolded_ = 0;
    std::vector<TraceEvent> out_;
};

}  // namespace

std::vector<TraceEvent> run_trace(const Cell& c, const Value& input, const std::vector<ScriptMove>& script,
                                  const Valuation& val, std::size_t depth) {
    Boundary b = infer_boundary(c, val.sig);
    if (!proto_equal(b.left, Proto::done())) {
        throw Error(ErrorKind::NotClosedLeft, "left boundary is " + print_proto(b.left));
    }
    require_value(input, b.top, val, "trace input");
    PV out = denote(c, val)(pv_leaf(""), input);
    return Walker(script, depth).run(out, b.right);
}

std::vector<ScriptMove> parse_script(const std::string& text) {
    std::vector<ScriptMove> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        std::string rest;
        std::getline(ls, rest);
        auto trim = rest.find_first_not_of(" \t");
        rest = trim == std::string::npos ? "" : rest.substr(trim);
        auto bad = [&](const std::string& why) {
            return Error(ErrorKind::Parse, "script line " + std::to_string(lineno) + ": " + why);
        };
        if (word == "recv") {
            if (rest.empty()) throw bad("recv needs a value");
            out.push_back({ScriptMove::Kind::Recv, parse_value(rest)});
        } else if (word == "pick") {
            if (rest == "0") {
                out.push_back({ScriptMove::Kind::Pick0, {}});
            } else if (rest == "1") {
                out.push_back({ScriptMove::Kind::Pick1, {}});
            } else {
                throw bad("pick takes 0 or 1");
            }
        } else if (word == "stop" && rest.empty()) {
            out.push_back({ScriptMove::Kind::Stop, {}});
        } else if (word == "continue" && rest.empty()) {
            out.push_back({ScriptMove::Kind::Continue, {}});
        } else {
            throw bad("unknown move '" + line + "'");
        }
    }
    return out;
}

std::string print_move(const ScriptMove& m) {
    switch (m.kind) {
        case ScriptMove::Kind::Recv: return "recv " + print_value(m.value);
        case ScriptMove::Kind::Pick0: return "pick 0";
        case ScriptMove::Kind::Pick1: return "pick 1";
        case ScriptMove::Kind::Stop: return "stop";
        case ScriptMove::Kind::Continue: return "continue";
    }
    return "?";
}

std::string print_event(const TraceEvent& e) {
    switch (e.kind) {
        case TraceEvent::Kind::Sent: return "sent " + print_value(e.value);
        case TraceEvent::Kind::Offered0: return "offered 0";
        case TraceEvent::Kind::Offered1: return "offered 1";
        case TraceEvent::Kind::Halted: return "halted";
        case TraceEvent::Kind::More: return "more";
        case TraceEvent::Kind::Result: return "result " + print_value(e.value);
    }
    return "?";
}

}  // namespace fcn
