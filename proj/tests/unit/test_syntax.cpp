#include "doctest.h"
#include "fcn/generate.hpp"
#include "fcn/syntax.hpp"

using namespace fcn;

namespace {

ErrorKind parse_error(const std::string& text, std::string* msg = nullptr) {
    try {
        parse_program(text);
    } catch (const Error& e) {
        if (msg) *msg = e.what();
        return e.kind();
    }
    return ErrorKind::Internal;
}

const char* kHeader = "object A; carrier A = {a0, a1};\n";

}  // namespace

TEST_CASE("generated terms survive a print and parse round trip") {
    Valuation val = default_valuation();
    TermGen g(val, 31);
    for (int i = 0; i < 150; ++i) {
        Obj e = g.obj(3);
        CHECK(parse_obj(print_obj(e)) == e);
        Proto p = g.proto(3);
        CHECK(parse_proto(print_proto(p)) == p);
        Cell c = g.cell(3);
        std::string text = print_cell(c);
        Cell back = parse_cell(text);
        CHECK_MESSAGE(back == c, text);
        CHECK(print_cell(back) == text);
    }
}

TEST_CASE("values and morphisms round trip") {
    for (const char* v : {"()", "a0", "(a0, b1)", "inl (a0, [b1, b2])", "inr []", "[(a0, c0), (a1, c0)]"}) {
        CHECK(print_value(parse_value(v)) == v);
    }
    for (const char* m : {"f ; g", "f * id{B}", "braid{A, B * C} ; distr{A, B, C}", "const{A, a1}", "pop{A}"}) {
        Mor mor = parse_mor(m);
        CHECK(parse_mor(print_mor(mor)) == mor);
    }
}

TEST_CASE("cell syntax") {
    Program prog = parse_program(std::string(kHeader) + "protocol P = send A * recv A;\n");
    CHECK(parse_cell("getL A", &prog) == Cell::get_l(Obj::gen("A")));
    CHECK(parse_cell("getL{A}", &prog) == Cell::get_l(Obj::gen("A")));
    CHECK(parse_cell("1 (A * A)", &prog) == Cell::id_v(Obj::tensor(Obj::gen("A"), Obj::gen("A"))));
    CHECK(parse_cell("id P^x", &prog) == Cell::id_h(Proto::star_x(prog.protocols.at("P"))));
    CHECK(parse_cell("in0{I, P}", &prog) == parse_cell("inj0{I, P}", &prog));
    CHECK(parse_cell("iterX(putR A / getR A; 1 A; id I)", &prog) ==
          parse_cell("iterX(putR A / getR A, 1 A, id I)", &prog));

    // '/' binds tighter than '|'.
    Cell c = parse_cell("putR A / getR A | 1 I", &prog);
    CHECK(c.kind() == Cell::Kind::HComp);
    CHECK(c.kid(0).kind() == Cell::Kind::VComp);
}

TEST_CASE("programs") {
    CHECK(parse_program("").cells.empty());
    CHECK(parse_program("# only a comment\n").cells.empty());

    Program p = parse_program(std::string(kHeader) + "cell z : [I | A -> A | I] = putR A | getL A;\n");
    REQUIRE(p.cells.size() == 1);
    CHECK(p.find_cell("z"));
    CHECK_FALSE(p.find_cell("w"));

    std::string msg;
    CHECK(parse_error(std::string(kHeader) + "cell z : [I | A -> I | I] = putR A | getL A;\n", &msg) ==
          ErrorKind::BoundaryMismatch);
    CHECK(msg.find("2:8") != std::string::npos);
    Program bad = parse_program(std::string(kHeader) + "cell bad = getL A | getL A;\n");
    try {
        infer_boundary(*bad.find_cell("bad"), bad.val.sig);
        FAIL("expected BoundaryMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoundaryMismatch);
        CHECK(std::string(e.what()).find("2:19") != std::string::npos);
    }

    CHECK(parse_error(std::string(kHeader) + "cell y = nope | 1 A;\n") == ErrorKind::UnknownCell);
    CHECK(parse_error(std::string(kHeader) + "cell y = 1 A; cell y = 1 A;\n") == ErrorKind::Parse);
    CHECK(parse_error(std::string(kHeader) + "cell y = 1 A\n") == ErrorKind::Parse);
    CHECK(parse_error("mor f : A -> A;\n") == ErrorKind::UnknownName);
    CHECK(parse_error(std::string(kHeader) + "mor f : A -> A; map f = { a0 -> a1; };\n") == ErrorKind::IllTypedValue);
    CHECK(parse_error("object A;\n") == ErrorKind::UnknownName);
}

TEST_CASE("the samples load and print boundaries") {
    for (const char* f : {"bakery.fcn", "mealy.fcn", "memory.fcn", "sales.fcn", "default.fcn"}) {
        Program prog = load_program(std::string(FCN_SAMPLES_DIR) + "/" + f);
        for (const auto& [name, c] : prog.cells) {
            CHECK_NOTHROW(infer_boundary(c, prog.val.sig));
            CHECK(parse_cell(print_cell(c), &prog) == c);
        }
    }
    Program mem = load_program(std::string(FCN_SAMPLES_DIR) + "/memory.fcn");
    CHECK(print_boundary(infer_boundary(*mem.find_cell("memory"), mem.val.sig)) ==
          "[I | A -> A | (send A * recv A)^x]");
    CHECK_THROWS_AS(load_program("/nonexistent.fcn"), Error);
}

TEST_CASE("pvals print along their protocol") {
    Proto u = Proto::seq(Proto::send(Obj::gen("A")), Proto::recv(Obj::gen("A")));
    PV p = pv_send(Value::atom_of("a0"), pv_table({{Value::atom_of("a0"), pv_leaf("x")},
                                                   {Value::atom_of("a1"), pv_leaf("y")}}));
    CHECK(print_pval(p, u, 4) == "(a0, {a0 -> x, a1 -> y})");
    CHECK(print_pval(pv_left(pv_leaf("x")), Proto::star_p(u), 4) == "stop x");
}
