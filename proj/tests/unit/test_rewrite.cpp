#include "doctest.h"
#include "fcn/generate.hpp"
#include "fcn/rewrite.hpp"
#include "fcn/syntax.hpp"

using namespace fcn;

namespace {

const Obj A = Obj::gen("A");

Program sample(const char* name) { return load_program(std::string(FCN_SAMPLES_DIR) + "/" + name); }

}  // namespace

TEST_CASE("single steps") {
    Valuation val = default_valuation();
    auto s = rewrite_step(Cell::hcomp(Cell::put_r(A), Cell::get_l(A)), val.sig);
    REQUIRE(s);
    CHECK(s->result == Cell::id_v(A));
    CHECK(s->rule == RuleId::YankHCircle);
    CHECK(s->pos.empty());

    Cell a = Cell::put_r(A), b = Cell::vcomp(Cell::promote(Mor::gen("n")), Cell::put_r(A));
    Proto sa = Proto::send(A);
    auto p = rewrite_step(Cell::hcomp(Cell::times(a, b), Cell::pi0(sa, sa)), val.sig);
    REQUIRE(p);
    CHECK(p->rule == RuleId::BetaPi0);
    CHECK(p->result == a);

    CHECK_FALSE(rewrite_step(Cell::id_v(A), val.sig));
}

TEST_CASE("the bakery fuses into one morphism") {
    Program prog = sample("bakery.fcn");
    Cell bakery = *prog.find_cell("bakery");
    auto rep = normalize_cell(bakery, 10000, prog.val.sig);
    CHECK_FALSE(rep.budget_exhausted);
    CHECK(rep.result.kind() == Cell::Kind::Promote);
    CHECK(cells_equal(bakery, rep.result, prog.val, {}));

    Obj bo = Obj::tensor(Obj::gen("bread"), Obj::gen("oven"));
    CHECK(normalize_cell(*prog.find_cell("give_bread"), 10000, prog.val.sig).result == Cell::id_v(bo));
}

TEST_CASE("budgets") {
    Program prog = sample("memory.fcn");
    Cell memory = *prog.find_cell("memory");
    auto rep = normalize_cell(memory, 0, prog.val.sig);
    CHECK(rep.result == memory);
    CHECK(rep.steps.empty());
    CHECK_FALSE(rep.budget_exhausted);

    Valuation val = default_valuation();
    Cell redex = Cell::hcomp(Cell::put_r(A), Cell::get_l(A));
    auto stuck = normalize_cell(redex, 0, val.sig);
    CHECK(stuck.result == redex);
    CHECK(stuck.budget_exhausted);

    Cell normal = Cell::id_v(A);
    auto none = normalize_cell(normal, 10, val.sig);
    CHECK(none.steps.empty());
    CHECK(none.result == normal);
}

TEST_CASE("steps preserve boundaries and replay to the result") {
    Valuation val = default_valuation();
    TermGen g(val, 23);
    for (int i = 0; i < 60; ++i) {
        Cell c = g.redex_cell(2);
        Boundary b = infer_boundary(c, val.sig);
        std::vector<Cell> seen;
        auto rep = normalize_cell(c, 50, val.sig, {}, [&](const Cell& before, const Step& s) {
            seen.push_back(before);
            CHECK(boundary_equal(infer_boundary(s.result, val.sig), b));
        });
        CHECK(rep.steps.size() <= 50);
        CHECK(seen.size() == rep.steps.size());

        Cell cur = c;
        for (const auto& [rule, pos] : rep.steps) {
            auto s = rewrite_step(cur, val.sig);
            REQUIRE(s);
            CHECK(s->rule == rule);
            CHECK(s->pos == pos);
            cur = s->result;
        }
        CHECK(cur == rep.result);
    }
}

TEST_CASE("rule names and positions print") {
    CHECK(std::string(rule_name(RuleId::BetaIterX1)) == "BetaIterX1");
    CHECK(print_position({}) == "root");
    CHECK(print_position({0, 1}) == "0.1");
}
