#include "doctest.h"
#include "fcn/derived.hpp"
#include "fcn/generate.hpp"
#include "fcn/syntax.hpp"

using namespace fcn;

namespace {

const Obj A = Obj::gen("A"), B = Obj::gen("B");
const Proto sA = Proto::send(A);

// A (send A * recv A)^x handle whose i-th layer sends a0, except layer `odd`, which sends a1.
PV memory_handle(std::size_t i, std::size_t odd) {
    return pv_lazy_pair([] { return pv_leaf("x"); },
                        [i, odd] {
                            std::vector<std::pair<Value, PV>> t;
                            for (const char* a : {"a0", "a1"}) t.emplace_back(Value::atom_of(a), memory_handle(i + 1, odd));
                            return pv_send(Value::atom_of(i == odd ? "a1" : "a0"), pv_table(std::move(t)));
                        });
}

std::size_t star_p_height(const PV& p) {
    if (p->kind == PNode::Kind::Left) return 0;
    REQUIRE(p->kind == PNode::Kind::Right);
    REQUIRE(p->next->kind == PNode::Kind::Send);
    return 1 + star_p_height(p->next->next);
}

}  // namespace

TEST_CASE("pval_equal") {
    PV p = pv_send(Value::atom_of("a0"), pv_leaf("x"));
    CHECK(pval_equal(p, pv_send(Value::atom_of("a0"), pv_leaf("x")), sA, 0));
    CHECK(pval_equal(p, p, sA, 9));

    Proto ra = Proto::recv(A);
    PV t1 = pv_table({{Value::atom_of("a0"), pv_leaf("x")}, {Value::atom_of("a1"), pv_leaf("x")}});
    PV t2 = pv_table({{Value::atom_of("a0"), pv_leaf("x")}, {Value::atom_of("a1"), pv_leaf("y")}});
    CHECK_FALSE(pval_equal(t1, t2, ra, 4));

    Proto mem = Proto::star_x(Proto::seq(sA, ra));
    PV h = memory_handle(1, 100), h4 = memory_handle(1, 4);
    CHECK(pval_equal(h, h4, mem, 3));
    CHECK_FALSE(pval_equal(h, h4, mem, 4));
}

TEST_CASE("enumerate_pvals") {
    Valuation val = default_valuation();
    CHECK(enumerate_pvals(Proto::done(), {pv_leaf("x1"), pv_leaf("x2")}, val).size() == 2);
    CHECK(enumerate_pvals(sA, {pv_leaf("x")}, val).size() == 2);
    CHECK(count_pvals(Proto::seq(sA, Proto::send(B)), 1, val, 1000) == 6);
    CHECK_THROWS_AS(enumerate_pvals(Proto::star_p(sA), {pv_leaf("x")}, val), Error);
}

TEST_CASE("sample_pvals") {
    Valuation val = default_valuation();
    Proto ap = Proto::star_p(sA);
    auto s1 = sample_pvals(ap, default_payloads(), val, 2, 50, 9);
    auto s2 = sample_pvals(ap, default_payloads(), val, 2, 50, 9);
    REQUIRE(s1.size() == 50);
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(pval_equal(s1[i], s2[i], ap, 4));
        CHECK(star_p_height(s1[i]) <= 2);
    }
    CHECK(sample_pvals(ap, default_payloads(), val, 2, 0, 9).empty());

    // Nested stars share one height budget.
    Proto nested = Proto::star_p(ap);
    for (const auto& p : sample_pvals(nested, default_payloads(), val, 3, 30, 1)) {
        std::function<std::size_t(const PV&, int)> h = [&](const PV& q, int level) -> std::size_t {
            if (q->kind == PNode::Kind::Left) return level == 0 ? 0 : h(q->next, level - 1);
            if (level == 1) return 1 + h(q->next->next, 1);
            return 1 + h(q->next, level + 1);
        };
        CHECK(h(p, 0) <= 3);
    }
}

TEST_CASE("denotations of identities and yanking") {
    Valuation val = default_valuation();
    Denotation id = denote(Cell::promote(Mor::id(A)), val);
    PV x = pv_leaf("x");
    for (const auto& a : enumerate_values(A, val)) {
        PV out = id(x, a);
        REQUIRE(out->kind == PNode::Kind::Leaf);
        CHECK(out->label == "x");
        CHECK(Value::tuple(out->factors) == a);
    }
    CHECK(cells_equal(Cell::hcomp(Cell::put_r(A), Cell::get_l(A)), Cell::id_v(A), val, {}));
    CHECK(cells_equal(Cell::hcomp(Cell::get_r(A), Cell::put_l(A)), Cell::id_v(A), val, {}));
    CHECK_FALSE(cells_equal(Cell::promote(Mor::gen("n")), Cell::id_v(A), val, {}));
}

TEST_CASE("a pairing followed by a projection is the component") {
    Valuation val = default_valuation();
    Cell t = Cell::times(Cell::put_r(A), Cell::vcomp(Cell::promote(Mor::gen("n")), Cell::put_r(A)));
    CHECK(cells_equal(Cell::hcomp(t, Cell::pi0(sA, sA)), Cell::put_r(A), val, {}));
    CHECK(cells_equal(Cell::hcomp(t, Cell::pi1(sA, sA)), Cell::vcomp(Cell::promote(Mor::gen("n")), Cell::put_r(A)),
                      val, {}));
    CHECK_FALSE(cells_equal(Cell::hcomp(t, Cell::pi1(sA, sA)), Cell::put_r(A), val, {}));
}

TEST_CASE("Mealy denotation matches the classical run") {
    Rng rng(42);
    for (int i = 0; i < 10; ++i) {
        Mealy m = random_mealy(rng, 3);
        std::vector<Value> word;
        for (std::size_t k = 0, n = rng() % 6; k < n; ++k) word.push_back(m.inputs[rng() % m.inputs.size()]);
        Value s0 = m.states[rng() % m.states.size()];
        auto [outs, last] = m.run(word, s0);

        Cell c = Cell::hcomp(word_sender(word, m.a, m.val), simple_iter_p(m.machine(), m.val.sig));
        PV p = denote(c, m.val)(pv_leaf("x"), s0);
        std::vector<Value> got;
        while (p->kind == PNode::Kind::Right) {
            REQUIRE(p->next->kind == PNode::Kind::Send);
            got.push_back(p->next->value);
            p = p->next->next;
        }
        REQUIRE(p->kind == PNode::Kind::Left);
        CHECK(got == outs);
        CHECK(Value::tuple(p->next->factors) == last);
    }
}

TEST_CASE("comparison reports skipped when sampling is disabled") {
    Valuation val = default_valuation();
    Proto ap = Proto::star_p(sA);
    Config cfg;
    cfg.samples = 0;
    auto r = compare_cells(Cell::id_h(ap), Cell::id_h(ap), val, cfg);
    CHECK(r.verdict == Verdict::Skipped);
    auto e = compare_cells(Cell::id_v(A), Cell::id_v(A), val, cfg);
    CHECK(e.verdict == Verdict::Equal);
    CHECK(e.exhaustive);
}
