#include "doctest.h"
#include "fcn/derived.hpp"
#include "fcn/generate.hpp"
#include "fcn/syntax.hpp"

using namespace fcn;

namespace {

const Obj A = Obj::gen("A"), B = Obj::gen("B");

bool has_boundary(const Cell& c, const Signature& sig, const Proto& l, const Obj& t, const Obj& b, const Proto& r) {
    return boundary_equal(infer_boundary(c, sig), Boundary{l, t, b, r});
}

}  // namespace

TEST_CASE("corner and identity boundaries") {
    Valuation val = default_valuation();
    const auto& sig = val.sig;
    Proto sa = Proto::send(A), ra = Proto::recv(A), I = Proto::done();
    CHECK(has_boundary(Cell::get_l(A), sig, sa, Obj::unit(), A, I));
    CHECK(has_boundary(Cell::put_r(A), sig, I, A, Obj::unit(), sa));
    CHECK(has_boundary(Cell::get_r(A), sig, I, Obj::unit(), A, ra));
    CHECK(has_boundary(Cell::put_l(A), sig, ra, A, Obj::unit(), I));
    CHECK(has_boundary(Cell::id_v(A), sig, I, A, A, I));
    CHECK(has_boundary(Cell::id_h(sa), sig, sa, Obj::unit(), Obj::unit(), sa));
    CHECK(has_boundary(Cell::promote(Mor::gen("f")), sig, I, A, B, I));
}

TEST_CASE("the zig-zag has an identity boundary") {
    Valuation val = default_valuation();
    CHECK(has_boundary(Cell::hcomp(Cell::put_r(A), Cell::get_l(A)), val.sig, Proto::done(), A, A, Proto::done()));
}

TEST_CASE("delta on an iterated protocol") {
    Valuation val = default_valuation();
    Proto u = Proto::send(A), ux = Proto::star_x(u);
    Cell d = Cell::iter_x(Cell::id_h(u), Cell::id_h(ux), star_pi1(u));
    CHECK(has_boundary(d, val.sig, ux, Obj::unit(), Obj::unit(), Proto::seq(ux, ux)));
}

TEST_CASE("mismatched composites are rejected with their location") {
    Valuation val = default_valuation();
    Cell bad = Cell::hcomp(Cell::get_l(A), Cell::get_l(A)).with_loc({3, 9});
    try {
        infer_boundary(bad, val.sig);
        FAIL("expected BoundaryMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoundaryMismatch);
        CHECK(std::string(e.what()).find("3:9") != std::string::npos);
    }
    CHECK_THROWS_AS(infer_boundary(Cell::vcomp(Cell::promote(Mor::gen("f")), Cell::promote(Mor::gen("f"))), val.sig),
                    Error);
    CHECK_THROWS_AS(infer_boundary(Cell::get_l(Obj::gen("Z")), val.sig), Error);
}

TEST_CASE("check_closed_left") {
    Valuation val = default_valuation();
    CHECK(check_closed_left(Cell::get_r(A), val.sig));
    CHECK_FALSE(check_closed_left(Cell::get_l(A), val.sig));
    CHECK(check_closed_left(Cell::hcomp(Cell::put_r(A), Cell::get_l(A)), val.sig));
}

TEST_CASE("generated cells typecheck deterministically") {
    Valuation val = default_valuation();
    TermGen g(val, 3);
    for (int i = 0; i < 100; ++i) {
        Cell c = g.cell(2);
        Boundary b1 = infer_boundary(c, val.sig), b2 = infer_boundary(c, val.sig);
        CHECK(boundary_equal(b1, b2));
    }
}

TEST_CASE("structural identity ignores source locations") {
    Cell a = Cell::get_l(A).with_loc({1, 1});
    Cell b = Cell::get_l(A).with_loc({2, 5});
    CHECK(a == b);
    CHECK(Cell::get_l(A) != Cell::get_r(A));
    CHECK(Cell::hchain({a, b, a}).size() == 5);
    CHECK(hfactors(Cell::hchain({a, b, a})).size() == 3);
}
