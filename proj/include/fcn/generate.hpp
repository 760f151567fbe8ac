#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fcn/cell.hpp"
#include "fcn/semantics.hpp"

namespace fcn {

// The signature used when no file is given; identical to samples/default.fcn.
extern const char* const kDefaultSignature;
Valuation default_valuation();

// Random well-typed terms over the finite objects of a valuation. All choices
// come from one seeded engine, so a seed fixes the whole stream.
class TermGen {
public:
    TermGen(const Valuation& val, std::uint64_t seed);

    Rng& rng() { return rng_; }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
    bool coin(std::size_t one_in) { return below(one_in) == 0; }

    const std::vector<Obj>& base_objects() const { return base_; }
    Obj base();
    Obj obj(int d);
    Proto proto(int d, bool stars = true);
    // Iteration-free protocols over finite carriers; inputs stay enumerable.
    Proto finite_proto(int d) { return proto(d, false); }

    Mor mor_from(const Obj& dom, int d);
    Mor endo(const Obj& t);

    Cell hcell(const Proto& left, int d);
    Cell closed_with_top(const Obj& top, int d);
    Cell with_left(const Proto& left, int d);
    Cell with_top(const Obj& top, int d);
    Cell square(const Obj& top, int d);
    Cell cell(int d, bool stars = true);
    // A cell containing at least one rewrite redex.
    Cell redex_cell(int d);

private:
    const Valuation& val_;
    Rng rng_;
    std::vector<Obj> base_;
    bool stars_ = true;
};

struct Mealy {
    Valuation val;
    Obj a, s, b;
    std::vector<Value> states, inputs, outputs;
    std::map<std::pair<Value, Value>, std::pair<Value, Value>> step;  // (input, state) -> (state, output)

    Cell machine() const;  // M : (A°, S, S, B°)
    // Classical loop: outputs and final state.
    std::pair<std::vector<Value>, Value> run(const std::vector<Value>& word, const Value& s0) const;
};

Mealy random_mealy(Rng& rng, std::size_t max_size = 3);

}  // namespace fcn
