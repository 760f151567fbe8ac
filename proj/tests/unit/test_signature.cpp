#include "doctest.h"
#include "fcn/generate.hpp"
#include "fcn/syntax.hpp"

using namespace fcn;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

const Obj A = Obj::gen("A"), B = Obj::gen("B"), C = Obj::gen("C");

}  // namespace

TEST_CASE("normalize_obj flattens tensors and drops units") {
    Obj nested = Obj::raw_tensor({Obj::raw_tensor({A, B}), Obj::unit()});
    CHECK(normalize_obj(nested) == Obj::tensor(A, B));
    CHECK(normalize_obj(Obj::unit()) == Obj::unit());
    Obj keep = Obj::tensor(A, Obj::sum(B, C));
    CHECK(normalize_obj(keep) == keep);
    CHECK(arity(keep) == 2);
    CHECK(arity(Obj::unit()) == 0);
}

TEST_CASE("normalize_obj is idempotent over generated objects") {
    Valuation val = default_valuation();
    TermGen g(val, 7);
    for (int i = 0; i < 200; ++i) {
        Obj e = g.obj(3);
        CHECK(normalize_obj(normalize_obj(e)) == normalize_obj(e));
    }
}

TEST_CASE("infer_mor_type") {
    Valuation val = default_valuation();
    auto t = infer_mor_type(Mor::distr(A, B, C), val.sig);
    CHECK(t.dom == Obj::tensor(Obj::sum(A, B), C));
    CHECK(t.cod == Obj::sum(Obj::tensor(A, C), Obj::tensor(B, C)));

    auto p = infer_mor_type(Mor::pop(A), val.sig);
    CHECK(p.dom == Obj::stack(A));
    CHECK(p.cod == Obj::sum(Obj::unit(), Obj::tensor(A, Obj::stack(A))));

    Program bakery = load_program(std::string(FCN_SAMPLES_DIR) + "/bakery.fcn");
    Obj d = Obj::gen("dough"), o = Obj::gen("oven"), b = Obj::gen("bread");
    auto bk = infer_mor_type(Mor::compose(Mor::gen("bake"), Mor::id(Obj::tensor(b, o))), bakery.val.sig);
    CHECK(bk.dom == Obj::tensor(d, o));
    CHECK(bk.cod == Obj::tensor(b, o));

    CHECK(kind_of([&] { infer_mor_type(Mor::compose(Mor::gen("f"), Mor::gen("f")), val.sig); }) ==
          ErrorKind::CompositionMismatch);
    CHECK(kind_of([&] { infer_mor_type(Mor::gen("nope"), val.sig); }) == ErrorKind::UnknownName);
}

TEST_CASE("composing with an identity keeps the type") {
    Valuation val = default_valuation();
    for (const auto& [name, ty] : val.sig.morphisms) {
        auto t = infer_mor_type(Mor::compose(Mor::gen(name), Mor::id(ty.cod)), val.sig);
        CHECK(t == infer_mor_type(Mor::gen(name), val.sig));
    }
}

TEST_CASE("eval_mor on distributors, copairing and stacks") {
    Valuation val = default_valuation();
    Value a0 = Value::atom_of("a0"), c0 = Value::atom_of("c0");
    CHECK(eval_mor(Mor::distr(A, B, C), Value::tuple({Value::inl(a0), c0}), val) ==
          Value::inl(Value::tuple({a0, c0})));

    Mor m = Mor::compose(Mor::inj0(A, B), Mor::copair(Mor::gen("f"), Mor::gen("r")));
    for (const auto& a : enumerate_values(A, val)) CHECK(eval_mor(m, a, val) == eval_mor(Mor::gen("f"), a, val));

    Value a1 = Value::atom_of("a1");
    CHECK(eval_mor(Mor::pop(A), Value::list({a1}), val) == Value::inr(Value::tuple({a1, Value::list({})})));
    CHECK(eval_mor(Mor::pop(A), Value::list({}), val) == Value::inl(Value::unit()));
}

TEST_CASE("distributors are inverse to their undistributors") {
    Valuation val = default_valuation();
    Obj dom = Obj::tensor(Obj::sum(A, B), C);
    for (const auto& v : enumerate_values(dom, val)) {
        CHECK(eval_mor(Mor::undistr(A, B, C), eval_mor(Mor::distr(A, B, C), v, val), val) == v);
    }
    Obj cod = Obj::sum(Obj::tensor(A, C), Obj::tensor(B, C));
    for (const auto& v : enumerate_values(cod, val)) {
        CHECK(eval_mor(Mor::distr(A, B, C), eval_mor(Mor::undistr(A, B, C), v, val), val) == v);
    }
    Obj ldom = Obj::tensor(A, Obj::sum(B, C));
    for (const auto& v : enumerate_values(ldom, val)) {
        CHECK(eval_mor(Mor::undistl(A, B, C), eval_mor(Mor::distl(A, B, C), v, val), val) == v);
    }
}

TEST_CASE("an injection under a tensor is the injection of the distributed sum") {
    Valuation val = default_valuation();
    Mor lhs = Mor::compose(Mor::tensor(Mor::inj0(A, B), Mor::id(C)), Mor::distr(A, B, C));
    Mor rhs = Mor::inj0(Obj::tensor(A, C), Obj::tensor(B, C));
    for (const auto& v : enumerate_values(Obj::tensor(A, C), val)) CHECK(eval_mor(lhs, v, val) == eval_mor(rhs, v, val));
}

TEST_CASE("braiding twice is the identity") {
    Valuation val = default_valuation();
    Obj ab = Obj::tensor(A, B);
    Obj abc = Obj::tensor(ab, C);
    for (auto [x, y] : {std::pair{A, B}, std::pair{ab, C}, std::pair{A, Obj::tensor(B, C)}, std::pair{abc, A}}) {
        Mor twice = Mor::compose(Mor::braid(x, y), Mor::braid(y, x));
        for (const auto& v : enumerate_values(Obj::tensor(x, y), val)) CHECK(eval_mor(twice, v, val) == v);
    }
}

TEST_CASE("enumerate_values") {
    Valuation val = default_valuation();
    auto unit = enumerate_values(Obj::unit(), val);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == Value::unit());

    // Brute force: every inl and inr over the atoms of A.
    std::vector<Value> want;
    for (const char* a : {"a0", "a1"}) want.push_back(Value::inl(Value::atom_of(a)));
    for (const char* a : {"a0", "a1"}) want.push_back(Value::inr(Value::atom_of(a)));
    auto got = enumerate_values(Obj::sum(A, A), val);
    CHECK(got.size() == 4);
    for (const auto& w : want) CHECK(std::find(got.begin(), got.end(), w) != got.end());

    CHECK(kind_of([&] { enumerate_values(Obj::stack(A), val); }) == ErrorKind::NotEnumerable);
    CHECK(carrier_size(Obj::tensor(A, B), val) == std::optional<std::size_t>(6));
}

TEST_CASE("valuation validation rejects partial tables") {
    Program p = parse_program("object A; carrier A = {a0, a1};");
    p.val.sig.add_morphism("h", A, A);
    p.val.set_map("h", {{Value::atom_of("a0"), Value::atom_of("a1")}});
    CHECK_THROWS_AS(p.val.validate(), Error);
}

TEST_CASE("value tuples flatten and split") {
    Value a = Value::atom_of("a"), b = Value::atom_of("b"), c = Value::atom_of("c");
    Value t = Value::tuple({Value::tuple({a, Value::unit()}), Value::tuple({b, c})});
    CHECK(value_factors(t).size() == 3);
    auto [l, r] = split_value(t, 1);
    CHECK(l == a);
    CHECK(r == Value::tuple({b, c}));
    CHECK(join_values(l, r) == t);
    CHECK(Value::tuple({a}) == a);
}
