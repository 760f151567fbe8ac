#include "doctest.h"
#include "fcn/derived.hpp"
#include "fcn/generate.hpp"
#include "fcn/syntax.hpp"

using namespace fcn;

namespace {

const Obj A = Obj::gen("A"), B = Obj::gen("B");
const Proto sA = Proto::send(A), sB = Proto::send(B), I = Proto::done();

bool has_boundary(const Cell& c, const Signature& sig, const Proto& l, const Obj& t, const Obj& b, const Proto& r) {
    return boundary_equal(infer_boundary(c, sig), Boundary{l, t, b, r});
}

}  // namespace

TEST_CASE("crossing cells") {
    Valuation val = default_valuation();
    CHECK(crossing(I, A) == Cell::id_v(A));
    Proto u = Proto::seq(sA, Proto::recv(B));
    CHECK(crossing(u, A) == Cell::vcomp(crossing(sA, A), crossing(Proto::recv(B), A)));
    Proto bx = Proto::star_x(sB);
    CHECK(has_boundary(crossing(bx, A), val.sig, bx, A, A, bx));
    Proto bp = Proto::star_p(sB);
    CHECK(has_boundary(crossing(bp, A), val.sig, bp, A, A, bp));
}

TEST_CASE("tensor of cells") {
    Valuation val = default_valuation();
    CHECK(cells_equal(tensor_cells(Cell::id_v(A), Cell::id_v(B), val.sig), Cell::id_v(Obj::tensor(A, B)), val, {}));
    CHECK(has_boundary(tensor_cells(Cell::put_r(A), Cell::get_l(B), val.sig), val.sig, sB, A, B, sA));
    Mor f = Mor::gen("f"), n = Mor::gen("n");
    CHECK(cells_equal(tensor_cells(Cell::promote(f), Cell::promote(n), val.sig), Cell::promote(Mor::tensor(f, n)),
                      val, {}));
}

TEST_CASE("simple iterators") {
    Valuation val = default_valuation();
    Proto bx = Proto::star_x(sB);
    CHECK(has_boundary(simple_iter_x(crossing(sB, A), val.sig), val.sig, bx, A, A, bx));

    Program mealy = load_program(std::string(FCN_SAMPLES_DIR) + "/mealy.fcn");
    Obj ma = Obj::gen("A"), ms = Obj::gen("S"), mb = Obj::gen("B");
    Cell mp = simple_iter_p(*mealy.find_cell("M"), mealy.val.sig);
    CHECK(has_boundary(mp, mealy.val.sig, Proto::star_p(Proto::send(ma)), ms, ms, Proto::star_p(Proto::send(mb))));

    try {
        simple_iter_x(Cell::get_l(A), val.sig);
        FAIL("expected NotSquare");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSquare);
    }
}

TEST_CASE("(co)monoid and (co)monad cells") {
    Valuation val = default_valuation();
    Proto u = Proto::seq(sA, Proto::recv(B));
    Proto ux = Proto::star_x(u), up = Proto::star_p(u);
    auto [delta, counit] = comonoid_x(u);
    CHECK(has_boundary(delta, val.sig, ux, Obj::unit(), Obj::unit(), Proto::seq(ux, ux)));
    auto [nabla, unit] = monoid_p(u);
    CHECK(has_boundary(nabla, val.sig, Proto::seq(up, up), Obj::unit(), Obj::unit(), up));
    CHECK(comonoid_x(sA).second == Cell::pi0(I, Proto::seq(sA, Proto::star_x(sA))));
    CHECK(has_boundary(unit, val.sig, I, Obj::unit(), Obj::unit(), up));

    CHECK(has_boundary(comonad_x(sA).first, val.sig, Proto::star_x(sA), Obj::unit(), Obj::unit(), sA));
    CHECK(has_boundary(monad_p(sA).first, val.sig, sA, Obj::unit(), Obj::unit(), Proto::star_p(sA)));
    CHECK(has_boundary(monad_p(u).second, val.sig, Proto::star_p(up), Obj::unit(), Obj::unit(), up));
    CHECK(has_boundary(comonad_x(u).second, val.sig, ux, Obj::unit(), Obj::unit(), Proto::star_x(ux)));
}

TEST_CASE("moral equivalence for sums of sends") {
    Valuation val = default_valuation();
    auto [gamma, delta] = moral_equiv_send(A, B);
    Obj ab = Obj::sum(A, B);
    CHECK(has_boundary(gamma, val.sig, Proto::offer(sA, sB), Obj::unit(), ab, I));
    CHECK(has_boundary(delta, val.sig, I, ab, Obj::unit(), Proto::offer(sA, sB)));

    auto [to, from] = moral_iso_send(A, B);
    Proto sab = Proto::send(ab);
    CHECK(cells_equal(Cell::hcomp(to, from), Cell::id_h(sab), val, {}));
    CHECK(cells_equal(Cell::hcomp(from, to), Cell::id_h(Proto::offer(sA, sB)), val, {}));

    auto [rto, rfrom] = moral_iso_recv(A, B);
    Proto rr = Proto::choose(Proto::recv(A), Proto::recv(B));
    CHECK(cells_equal(Cell::hcomp(rto, rfrom), Cell::id_h(rr), val, {}));
    CHECK(cells_equal(Cell::hcomp(rfrom, rto), Cell::id_h(Proto::recv(ab)), val, {}));
}

TEST_CASE("word senders") {
    Valuation val = default_valuation();
    Proto ap = Proto::star_p(sA);
    Cell empty = word_sender({}, A, val);
    CHECK(empty.kind() == Cell::Kind::Inj0);
    CHECK(has_boundary(empty, val.sig, I, Obj::unit(), Obj::unit(), ap));
    CHECK(has_boundary(word_sender({Value::atom_of("a1")}, A, val), val.sig, I, Obj::unit(), Obj::unit(), ap));
    CHECK_THROWS_AS(word_sender({Value::atom_of("zz")}, A, val), Error);
}

TEST_CASE("crossing swaps agree on generated cells") {
    Valuation val = default_valuation();
    TermGen g(val, 5);
    for (int i = 0; i < 30; ++i) {
        Cell a = g.cell(1, false);
        auto [lhs, rhs] = crossing_swap(a, g.base(), val.sig);
        CHECK(boundary_equal(infer_boundary(lhs, val.sig), infer_boundary(rhs, val.sig)));
        CHECK(cells_equal(lhs, rhs, val, {}));
    }
}
