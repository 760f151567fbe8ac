#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fcn/cell.hpp"

namespace fcn {

enum class RuleId {
    YankHCircle,
    YankVCircle,
    YankHBullet,
    YankVBullet,
    CornerCompose,
    CornerTensor,
    CornerId,
    BetaPi0,
    BetaPi1,
    BetaInj0,
    BetaInj1,
    BetaCopair0,
    BetaCopair1,
    BetaIterX0,
    BetaIterX1,
    BetaIterP0,
    BetaIterP1,
    UnitElim,
    InterchangeAssoc,
};

const char* rule_name(RuleId r);

// Child indices from the root.
using Position = std::vector<std::size_t>;
std::string print_position(const Position& p);

struct RewriteOptions {
    // Mutation fixture: a deliberately unsound pi0 rule for testing the soundness check.
    bool mutant_swap_beta_pi = false;
};

struct Step {
    Cell result;
    RuleId rule;
    Position pos;
};

std::optional<Step> rewrite_step(const Cell& c, const Signature& sig, const RewriteOptions& opts = {});

struct RewriteReport {
    std::vector<std::pair<RuleId, Position>> steps;
    Cell result;
    bool budget_exhausted = false;
};

// on_step sees the term before each fired step together with the step.
RewriteReport normalize_cell(const Cell& c, std::size_t budget, const Signature& sig,
                             const RewriteOptions& opts = {},
                             const std::function<void(const Cell&, const Step&)>& on_step = nullptr);

}  // namespace fcn
