#include "doctest.h"
#include "fcn/generate.hpp"

using namespace fcn;

namespace {

const Proto sA = Proto::send(Obj::gen("A")), rB = Proto::recv(Obj::gen("B")), sB = Proto::send(Obj::gen("B"));

}  // namespace

TEST_CASE("normalize flattens Seq") {
    CHECK(normalize(Proto::raw_seq({Proto::raw_seq({sA, rB}), Proto::done()})) == Proto::seq(sA, rB));
    CHECK(normalize(Proto::done()) == Proto::done());
    CHECK(normalize(Proto::raw_seq({Proto::star_x(sA)})) == Proto::star_x(sA));
}

TEST_CASE("unfolding stars") {
    CHECK(unfold_star_x(Proto::star_x(sA)) == Proto::choose(Proto::done(), Proto::seq(sA, Proto::star_x(sA))));
    Proto u = Proto::seq(sA, rB);
    CHECK(unfold_star_p(Proto::star_p(u)) ==
          Proto::offer(Proto::done(), Proto::seq({sA, rB, Proto::star_p(u)})));
    try {
        unfold_star_x(sA);
        FAIL("expected NotAStar");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAStar);
    }
}

TEST_CASE("proto_equal") {
    Proto u = Proto::seq(sA, rB);
    CHECK(proto_equal(Proto::star_x(u), Proto::choose(Proto::done(), Proto::seq(u, Proto::star_x(u)))));
    CHECK(proto_equal(Proto::raw_seq({sA, Proto::done()}), sA));
    CHECK_FALSE(proto_equal(Proto::choose(sA, sB), Proto::choose(sB, sA)));
    CHECK_FALSE(proto_equal(Proto::choose(sA, sB), Proto::offer(sA, sB)));
    CHECK_FALSE(proto_equal(Proto::star_x(sA), Proto::star_p(sA)));
    // Two unfoldings deep.
    Proto x = Proto::star_x(sA);
    Proto twice = Proto::choose(Proto::done(), Proto::seq(sA, Proto::choose(Proto::done(), Proto::seq(sA, x))));
    CHECK(proto_equal(twice, x));
}

TEST_CASE("proto_equal is an equivalence and a congruence on generated protocols") {
    Valuation val = default_valuation();
    TermGen g(val, 11);
    std::vector<Proto> ps;
    for (int i = 0; i < 40; ++i) {
        Proto p = g.proto(2);
        ps.push_back(p);
        // Unfolded copies are equal to their originals.
        if (p.kind == Proto::Kind::StarX) ps.push_back(unfold_star_x(p));
        if (p.kind == Proto::Kind::StarP) ps.push_back(unfold_star_p(p));
    }
    for (const auto& p : ps) {
        CHECK(proto_equal(p, p));
        CHECK(normalize(normalize(p)) == normalize(p));
        CHECK(proto_equal(Proto::star_x(p), unfold_star_x(Proto::star_x(p))));
        CHECK(proto_equal(Proto::star_p(p), unfold_star_p(Proto::star_p(p))));
    }
    Proto r = g.proto(1);
    for (const auto& p : ps) {
        for (const auto& q : ps) {
            bool pq = proto_equal(p, q);
            CHECK(pq == proto_equal(q, p));
            if (pq) CHECK(proto_equal(Proto::seq(p, r), Proto::seq(q, r)));
            for (const auto& s : ps) {
                if (pq && proto_equal(q, s)) CHECK(proto_equal(p, s));
            }
        }
    }
}

TEST_CASE("fold_stars undoes one unfolding") {
    Proto u = Proto::seq(sA, rB);
    CHECK(fold_stars(unfold_star_x(Proto::star_x(u))) == Proto::star_x(u));
    CHECK(fold_stars(unfold_star_p(Proto::star_p(u))) == Proto::star_p(u));
    CHECK(fold_stars(Proto::choose(Proto::done(), sA)) == Proto::choose(Proto::done(), sA));
}

TEST_CASE("iteration_free") {
    CHECK(iteration_free(Proto::seq(sA, Proto::choose(rB, sB))));
    CHECK_FALSE(iteration_free(Proto::seq(sA, Proto::star_p(rB))));
}
