#include "doctest.h"
#include "fcn/generate.hpp"
#include "fcn/laws.hpp"

using namespace fcn;

TEST_CASE("the corner group passes exhaustively") {
    auto rows = run_law_group(LawGroup::Corner, default_valuation(), {});
    REQUIRE(rows.size() == 7);
    for (const auto& r : rows) {
        CHECK_MESSAGE(r.status() == LawResult::Status::Pass, print_law_line(r));
        CHECK(r.exhaustive == r.instances);
    }
}

TEST_CASE("the mutated rule fails rewrite soundness") {
    LawOptions opts;
    opts.rewrite.mutant_swap_beta_pi = true;
    opts.rewrite_terms = 20;
    bool found = false;
    for (const auto& r : run_law_group(LawGroup::Rewrite, default_valuation(), opts)) {
        if (r.id != "rewrite-soundness") continue;
        found = true;
        CHECK(r.status() == LawResult::Status::Fail);
        CHECK_FALSE(r.counterexample.empty());
    }
    CHECK(found);

    opts.rewrite.mutant_swap_beta_pi = false;
    for (const auto& r : run_law_group(LawGroup::Rewrite, default_valuation(), opts)) {
        CHECK_MESSAGE(r.status() == LawResult::Status::Pass, print_law_line(r));
    }
}

TEST_CASE("without samples the sampled laws are skipped") {
    LawOptions opts;
    opts.cfg.samples = 0;
    std::size_t skipped = 0;
    for (auto g : {LawGroup::Semantics, LawGroup::Crossing}) {
        for (const auto& r : run_law_group(g, default_valuation(), opts)) {
            CHECK(r.status() != LawResult::Status::Fail);
            if (r.status() == LawResult::Status::Skipped) ++skipped;
        }
    }
    CHECK(skipped >= 2);
}

TEST_CASE("law runs are reproducible") {
    auto a = run_law_group(LawGroup::Choice, default_valuation(), {});
    auto b = run_law_group(LawGroup::Choice, default_valuation(), {});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].instances == b[i].instances);
        CHECK(a[i].exhaustive == b[i].exhaustive);
    }
}

TEST_CASE("law lines") {
    LawResult r{"beta-pi0", 40, 0, 0, 40, ""};
    CHECK(print_law_line(r) == "PASS beta-pi0  instances=40 exhaustive=40");
    LawResult f{"rewrite-soundness", 3, 1, 0, 2, "x"};
    CHECK(print_law_line(f).rfind("FAIL rewrite-soundness", 0) == 0);
    LawResult s{"payload-relabel", 5, 0, 5, 0, ""};
    CHECK(s.status() == LawResult::Status::Skipped);
    CHECK(std::string(law_group_name(LawGroup::Iteration)) == "iteration");
}
