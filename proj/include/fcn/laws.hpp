#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcn/rewrite.hpp"
#include "fcn/semantics.hpp"

namespace fcn {

struct LawResult {
    enum class Status { Pass, Fail, Skipped };

    std::string id;
    std::size_t instances = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t exhaustive = 0;  // instances decided over all inputs
    std::string counterexample;  // first failure

    Status status() const;
};

enum class LawGroup { Signature, Protocol, Corner, Interchange, Choice, Crossing, Iteration, Semantics, Rewrite };

const char* law_group_name(LawGroup g);
std::vector<LawGroup> all_law_groups();

struct LawOptions {
    Config cfg;
    RewriteOptions rewrite;
    std::size_t random = 200;          // instances for the randomized laws
    std::size_t small_random = 40;     // instances for the derived-cell laws
    std::size_t rewrite_terms = 100;   // random terms for rewrite soundness
    std::size_t rewrite_budget = 200;
    std::vector<Cell> golden;          // extra terms for rewrite soundness
};

std::vector<LawResult> run_law_group(LawGroup g, const Valuation& val, const LawOptions& opts);
// Every group, ordered by law id.
std::vector<LawResult> run_all_laws(const Valuation& val, const LawOptions& opts);

std::string print_law_line(const LawResult& r);

// Times(idV(A (+) A), [swap]) | pi0: the term on which the mutated pi0 rule is unsound.
Cell mutation_fixture(const Obj& a);

}  // namespace fcn
