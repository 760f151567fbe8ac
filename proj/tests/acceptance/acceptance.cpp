#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fcn/derived.hpp"
#include "fcn/generate.hpp"
#include "fcn/laws.hpp"
#include "fcn/syntax.hpp"
#include "fcn/trace.hpp"

using namespace fcn;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::string sample(const std::string& name) { return std::string(FCN_SAMPLES_DIR) + "/" + name; }

Outcome golden_typecheck() {
    struct Expect {
        const char* file;
        const char* cell;
        const char* left;
        const char* top;
        const char* bottom;
        const char* right;
    };
    const std::vector<Expect> table = {
        {"bakery.fcn", "kneader", "I", "dough", "I", "send dough"},
        {"bakery.fcn", "baker", "send dough", "oven", "bread * oven", "I"},
        {"bakery.fcn", "bakery", "I", "dough * oven", "bread * oven", "I"},
        {"bakery.fcn", "react", "send bread + send dough", "oven", "bread * oven", "I"},
        {"bakery.fcn", "H", "send dough x send oven", "I", "bread * oven", "recv dough x recv oven"},
        {"bakery.fcn", "H_stack", "send bread x I", "stack bread", "stack bread", "I"},
        {"mealy.fcn", "M", "send A", "S", "S", "send B"},
        {"mealy.fcn", "Mplus", "(send A)^+", "S", "S", "(send B)^+"},
        {"memory.fcn", "memory", "I", "A", "A", "(send A * recv A)^x"},
        {"sales.fcn", "sale", "send $ * (recv $ x recv bread)", "stack bread * stack $", "stack bread * stack $", "I"},
        {"sales.fcn", "sales", "(send $ * (recv $ x recv bread))^+", "stack bread * stack $",
         "stack bread * stack $", "I"},
    };
    Outcome out;
    for (const auto& e : table) {
        try {
            Program prog = load_program(sample(e.file));
            auto c = prog.find_cell(e.cell);
            if (!c) {
                out.fail(std::string("missing cell ") + e.cell);
                continue;
            }
            Boundary want{parse_proto(e.left, &prog), parse_obj(e.top), parse_obj(e.bottom), parse_proto(e.right, &prog)};
            Boundary got = infer_boundary(*c, prog.val.sig);
            if (!boundary_equal(got, want)) out.fail(std::string(e.cell) + " : " + print_boundary(got));
        } catch (const Error& err) {
            out.fail(std::string(e.cell) + ": " + err.what());
        }
    }
    if (out.ok) out.detail = std::to_string(table.size()) + " cells";
    return out;
}

Outcome law_group(LawGroup g, bool require_exhaustive, const std::string& counted = "", std::size_t at_least = 0) {
    Outcome out;
    LawOptions opts;
    std::size_t rows = 0;
    for (const auto& r : run_law_group(g, default_valuation(), opts)) {
        ++rows;
        if (r.status() != LawResult::Status::Pass) out.fail(print_law_line(r));
        if (require_exhaustive && r.exhaustive != r.instances) out.fail(r.id + " not exhaustive");
        if (r.id == counted && r.instances < at_least) out.fail(r.id + " ran " + std::to_string(r.instances));
    }
    if (rows == 0) out.fail("no laws");
    if (out.ok) out.detail = std::to_string(rows) + " laws";
    return out;
}

Outcome rewrite_soundness() {
    Outcome out;
    std::size_t terms = 0;
    auto run = [&](const Valuation& val, LawOptions opts) {
        for (const auto& r : run_law_group(LawGroup::Rewrite, val, opts)) {
            if (r.status() != LawResult::Status::Pass) out.fail(print_law_line(r));
            if (r.id == "rewrite-soundness") terms += r.instances;
        }
    };
    for (const char* f : {"bakery.fcn", "mealy.fcn", "memory.fcn", "sales.fcn"}) {
        Program prog = load_program(sample(f));
        LawOptions opts;
        opts.rewrite_terms = 0;
        for (const auto& [name, c] : prog.cells) opts.golden.push_back(c);
        run(prog.val, opts);
    }
    run(default_valuation(), LawOptions{});
    if (out.ok) out.detail = std::to_string(terms) + " terms";
    return out;
}

Outcome mealy_oracle() {
    Outcome out;
    Rng rng(Config{}.seed);
    const std::size_t machines = 50;
    for (std::size_t i = 0; i < machines; ++i) {
        Mealy m = random_mealy(rng, 3);
        std::vector<Value> word;
        std::size_t len = rng() % 6;
        for (std::size_t k = 0; k < len; ++k) word.push_back(m.inputs[rng() % m.inputs.size()]);
        Value s0 = m.states[rng() % m.states.size()];

        auto [outputs, final_state] = m.run(word, s0);
        std::vector<TraceEvent> want;
        for (const auto& b : outputs) {
            want.push_back(TraceEvent::of(TraceEvent::Kind::More));
            want.push_back(TraceEvent::sent(b));
        }
        want.push_back(TraceEvent::of(TraceEvent::Kind::Halted));
        want.push_back(TraceEvent::result(final_state));

        try {
            Cell c = Cell::hcomp(word_sender(word, m.a, m.val), simple_iter_p(m.machine(), m.val.sig));
            auto got = run_trace(c, s0, {}, m.val, Config{}.depth);
            if (got != want) {
                std::ostringstream os;
                os << "machine " << i << ":";
                for (const auto& e : got) os << " " << print_event(e);
                out.fail(os.str());
            }
        } catch (const Error& err) {
            out.fail("machine " + std::to_string(i) + ": " + err.what());
        }
    }
    if (out.ok) out.detail = std::to_string(machines) + " machines";
    return out;
}

Outcome scenario_traces() {
    Outcome out;
    auto check = [&](const char* file, const char* cell, const char* input, const std::vector<ScriptMove>& script,
                     const std::vector<TraceEvent>& want) {
        try {
            Program prog = load_program(sample(file));
            auto got = run_trace(*prog.find_cell(cell), parse_value(input), script, prog.val, Config{}.depth);
            if (got != want) {
                std::string s = std::string(cell) + " on " + input + ":";
                for (const auto& e : got) s += " " + print_event(e);
                out.fail(s);
            }
        } catch (const Error& err) {
            out.fail(std::string(cell) + ": " + err.what());
        }
    };
    using M = ScriptMove::Kind;
    auto atom = [](const char* a) { return Value::atom_of(a); };

    check("memory.fcn", "memory", "a0",
          {{M::Continue, {}}, {M::Recv, atom("a1")}, {M::Continue, {}}, {M::Recv, atom("a2")}, {M::Stop, {}}},
          {TraceEvent::sent(atom("a0")), TraceEvent::sent(atom("a1")), TraceEvent::result(atom("a2"))});
    check("memory.fcn", "memory", "a1", {{M::Stop, {}}}, {TraceEvent::result(atom("a1"))});

    // Empty queue: both stacks come back untouched.
    check("sales.fcn", "closing", "([loaf], [d1])", {}, {TraceEvent::result(parse_value("([loaf], [d1])"))});
    // Bread in stock: the customer gets the loaf and the money is stacked.
    check("sales.fcn", "selling", "([loaf], [])", {}, {TraceEvent::result(parse_value("(inr loaf, [], [d1])"))});
    // No bread: the money goes back.
    check("sales.fcn", "selling", "([], [d2])", {}, {TraceEvent::result(parse_value("(inl d1, [], [d2])"))});
    if (out.ok) out.detail = "5 traces";
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "golden-typecheck", 1, golden_typecheck},
        {2, "corner-suite", 5, [] { return law_group(LawGroup::Corner, true); }},
        {3, "interchange-suite", 30, [] { return law_group(LawGroup::Interchange, false, "interchange", 200); }},
        {4, "choice-suite", 30, [] { return law_group(LawGroup::Choice, true); }},
        {5, "crossing-suite", 60, [] { return law_group(LawGroup::Crossing, false, "crossing-swap", 200); }},
        {6, "iteration-suite", 120, [] { return law_group(LawGroup::Iteration, false); }},
        {7, "rewrite-soundness", 60, rewrite_soundness},
        {8, "mealy-oracle", 30, mealy_oracle},
        {9, "scenario-traces", 5, scenario_traces},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limit) o.fail("over time limit");
        if (!o.ok) ++failures;
        std::printf("%s %d %s  %.2fs (limit %.0fs)  %s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, secs, c.limit,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
