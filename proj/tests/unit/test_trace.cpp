#include "doctest.h"
#include "fcn/derived.hpp"
#include "fcn/generate.hpp"
#include "fcn/rewrite.hpp"
#include "fcn/syntax.hpp"
#include "fcn/trace.hpp"

using namespace fcn;

namespace {

Program sample(const char* name) { return load_program(std::string(FCN_SAMPLES_DIR) + "/" + name); }

Value at(const char* a) { return Value::atom_of(a); }

ErrorKind trace_error(const Cell& c, const Value& in, const std::vector<ScriptMove>& script, const Valuation& val,
                      std::size_t depth = 4) {
    try {
        run_trace(c, in, script, val, depth);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

using M = ScriptMove::Kind;

}  // namespace

TEST_CASE("memory cell") {
    Program prog = sample("memory.fcn");
    Cell memory = *prog.find_cell("memory");
    std::vector<ScriptMove> script = {{M::Continue, {}}, {M::Recv, at("a1")}, {M::Continue, {}}, {M::Recv, at("a2")},
                                      {M::Stop, {}}};
    std::vector<TraceEvent> want = {TraceEvent::sent(at("a0")), TraceEvent::sent(at("a1")), TraceEvent::result(at("a2"))};
    CHECK(run_trace(memory, at("a0"), script, prog.val, 4) == want);
    CHECK(run_trace(memory, at("a0"), script, prog.val, 4) == run_trace(memory, at("a0"), script, prog.val, 4));

    CHECK(trace_error(memory, at("a0"), {{M::Continue, {}}}, prog.val) == ErrorKind::ScriptUnderrun);
    CHECK(trace_error(memory, at("a0"), {{M::Stop, {}}, {M::Stop, {}}}, prog.val) == ErrorKind::ScriptOverrun);
    CHECK(trace_error(memory, at("a0"), {{M::Pick0, {}}}, prog.val) == ErrorKind::WrongMove);
    CHECK(trace_error(memory, at("a0"), script, prog.val, 1) == ErrorKind::DepthExceeded);
    CHECK(trace_error(memory, at("zz"), {{M::Stop, {}}}, prog.val) == ErrorKind::IllTypedValue);
}

TEST_CASE("Mealy machine over a two letter word") {
    Program prog = sample("mealy.fcn");
    Cell mp = *prog.find_cell("Mplus");
    Cell c = Cell::hcomp(word_sender({at("a1"), at("a1")}, Obj::gen("A"), prog.val), mp);
    // Parity machine from s0: a1 -> (s1, b1), a1 -> (s0, b0).
    std::vector<TraceEvent> want = {TraceEvent::of(TraceEvent::Kind::More), TraceEvent::sent(at("b1")),
                                    TraceEvent::of(TraceEvent::Kind::More), TraceEvent::sent(at("b0")),
                                    TraceEvent::of(TraceEvent::Kind::Halted), TraceEvent::result(at("s0"))};
    CHECK(run_trace(c, at("s0"), {}, prog.val, 4) == want);
}

TEST_CASE("traces need a closed left boundary") {
    Valuation val = default_valuation();
    CHECK(trace_error(Cell::get_l(Obj::gen("A")), Value::unit(), {}, val) == ErrorKind::NotClosedLeft);
}

TEST_CASE("choices on both sides") {
    Program prog = sample("bakery.fcn");
    Cell gd = *prog.find_cell("give_dough");
    auto events = run_trace(gd, parse_value("(raw, o)"), {}, prog.val, 4);
    REQUIRE(events.size() == 1);
    CHECK(events[0] == TraceEvent::result(parse_value("(flat, o)")));

    Cell offer = Cell::hcomp(Cell::put_r(Obj::gen("dough")),
                             Cell::inj1(Proto::send(Obj::gen("bread")), Proto::send(Obj::gen("dough"))));
    auto ev = run_trace(offer, at("raw"), {}, prog.val, 4);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == TraceEvent::of(TraceEvent::Kind::Offered1));
    CHECK(ev[1] == TraceEvent::sent(at("raw")));

    CHECK(ev[2] == TraceEvent::result(Value::unit()));
}

TEST_CASE("equal cells give equal traces") {
    Program prog = sample("bakery.fcn");
    Cell bakery = *prog.find_cell("bakery");
    Cell fused = normalize_cell(bakery, 10000, prog.val.sig).result;
    for (const char* in : {"(raw, o)", "(kneaded, o)"}) {
        CHECK(run_trace(bakery, parse_value(in), {}, prog.val, 4) == run_trace(fused, parse_value(in), {}, prog.val, 4));
    }
}

TEST_CASE("scripts and events print and parse") {
    auto moves = parse_script("# driving the memory\ncontinue\nrecv a1\n\npick 0\npick 1\nstop\n");
    REQUIRE(moves.size() == 5);
    CHECK(moves[1] == ScriptMove{M::Recv, at("a1")});
    CHECK(moves[2].kind == M::Pick0);
    CHECK(moves[3].kind == M::Pick1);
    std::string text;
    for (const auto& m : moves) text += print_move(m) + "\n";
    CHECK(parse_script(text) == moves);
    CHECK_THROWS_AS(parse_script("jump\n"), Error);

    CHECK(print_event(TraceEvent::sent(at("a0"))) == "sent a0");
    CHECK(print_event(TraceEvent::of(TraceEvent::Kind::Offered0)) == "offered 0");
    CHECK(print_event(TraceEvent::of(TraceEvent::Kind::Halted)) == "halted");
    CHECK(print_event(TraceEvent::of(TraceEvent::Kind::More)) == "more");
    CHECK(print_event(TraceEvent::result(parse_value("([loaf], [])"))) == "result ([loaf], [])");
}
