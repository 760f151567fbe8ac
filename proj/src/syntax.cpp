#include "fcn/syntax.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include "fcn/derived.hpp"

namespace fcn {

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string paren(bool wrap, const std::string& s) { return wrap ? "(" + s + ")" : s; }

// Object levels: 0 sum, 1 tensor, 2 atom.
std::string obj_at(const Obj& e, int ctx) {
    switch (e.kind) {
        case Obj::Kind::Unit:
            return "I";
        case Obj::Kind::Gen:
            return e.name;
        case Obj::Kind::Stack:
            return "stack " + obj_at(e.args[0], 2);
        case Obj::Kind::Tensor: {
            std::string s;
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i) s += " * ";
                s += obj_at(e.args[i], 2);
            }
            return paren(ctx > 1, s);
        }
        case Obj::Kind::Sum:
            return paren(ctx > 0, obj_at(e.args[0], 0) + " (+) " + obj_at(e.args[1], 1));
    }
    return "?";
}

// Protocol levels: 0 choice, 1 seq, 2 postfix, 3 atom.
std::string proto_at(const Proto& p, int ctx) {
    switch (p.kind) {
        case Proto::Kind::Done:
            return "I";
        case Proto::Kind::Send:
            return "send " + obj_at(p.obj, 2);
        case Proto::Kind::Recv:
            return "recv " + obj_at(p.obj, 2);
        case Proto::Kind::Seq: {
            std::string s;
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
                if (i) s += " * ";
                s += proto_at(p.parts[i], 2);
            }
            return paren(ctx > 1, s);
        }
        case Proto::Kind::Choose:
        case Proto::Kind::Offer: {
            const char* op = p.kind == Proto::Kind::Choose ? " x " : " + ";
            return paren(ctx > 0, proto_at(p.parts[0], 0) + op + proto_at(p.parts[1], 1));
        }
        case Proto::Kind::StarX:
            return paren(ctx > 2, proto_at(p.parts[0], 3) + "^x");
        case Proto::Kind::StarP:
            return paren(ctx > 2, proto_at(p.parts[0], 3) + "^+");
    }
    return "?";
}

// Morphism levels: 0 compose, 1 tensor, 2 atom.
std::string mor_at(const Mor& m, int ctx) {
    auto objs = [&](std::size_t n) {
        std::string s = "{";
        for (std::size_t i = 0; i < n; ++i) {
            if (i) s += ", ";
            s += print_obj(m.objs[i]);
        }
        return s + "}";
    };
    using K = Mor::Kind;
    switch (m.kind) {
        case K::Gen:
            return m.name;
        case K::Id:
            return "id" + objs(1);
        case K::Compose:
            return paren(ctx > 0, mor_at(m.subs[0], 0) + " ; " + mor_at(m.subs[1], 1));
        case K::Tensor:
            return paren(ctx > 1, mor_at(m.subs[0], 1) + " * " + mor_at(m.subs[1], 2));
        case K::Braid:
            return "braid" + objs(2);
        case K::Inj0:
            return "inl" + objs(2);
        case K::Inj1:
            return "inr" + objs(2);
        case K::Copair:
            return "copair(" + mor_at(m.subs[0], 0) + ", " + mor_at(m.subs[1], 0) + ")";
        case K::DistR:
            return "distr" + objs(3);
        case K::UndistR:
            return "undistr" + objs(3);
        case K::DistL:
            return "distl" + objs(3);
        case K::UndistL:
            return "undistl" + objs(3);
        case K::Nil:
            return "nil" + objs(1);
        case K::Push:
            return "push" + objs(1);
        case K::Pop:
            return "pop" + objs(1);
        case K::Const:
            return "const{" + print_obj(m.objs[0]) + ", " + print_value(m.value) + "}";
    }
    return "?";
}

// Cell levels: 0 horizontal, 1 vertical, 2 atom.
std::string cell_at(const Cell& c, int ctx) {
    using K = Cell::Kind;
    const auto& n = c.node();
    auto two = [&](const char* name) {
        return std::string(name) + "{" + print_proto(n.p0) + ", " + print_proto(n.p1) + "}";
    };
    auto kids = [&](const char* name, const char* sep = ", ") {
        std::string s = std::string(name) + "(";
        for (std::size_t i = 0; i < n.kids.size(); ++i) {
            if (i) s += sep;
            s += cell_at(n.kids[i], 0);
        }
        return s + ")";
    };
    switch (n.kind) {
        case K::Promote:
            return "[" + print_mor(n.mor) + "]";
        case K::GetL:
            return "getL " + obj_at(n.obj, 2);
        case K::PutR:
            return "putR " + obj_at(n.obj, 2);
        case K::GetR:
            return "getR " + obj_at(n.obj, 2);
        case K::PutL:
            return "putL " + obj_at(n.obj, 2);
        case K::IdV:
            return "1 " + obj_at(n.obj, 2);
        case K::IdH:
            return "id " + proto_at(n.p0, 2);
        case K::HComp:
            return paren(ctx > 0, cell_at(n.kids[0], 0) + " | " + cell_at(n.kids[1], 1));
        case K::VComp:
            return paren(ctx > 1, cell_at(n.kids[0], 1) + " / " + cell_at(n.kids[1], 2));
        case K::Pi0:
            return two("pi0");
        case K::Pi1:
            return two("pi1");
        case K::Inj0:
            return two("in0");
        case K::Inj1:
            return two("in1");
        case K::Times:
            return kids("times");
        case K::Plus:
            return kids("plus");
        case K::CopairC:
            return kids("copair");
        case K::IterX:
            return kids("iterX", "; ");
        case K::IterP:
            return kids("iterP", "; ");
    }
    return "?";
}

std::string raw_pval(const PV& p, std::size_t depth);

std::string leaf_text(const PV& p, std::size_t depth) {
    std::string s;
    if (p->inner) {
        s = "{" + raw_pval(p->inner, depth) + "}";
    } else if (p->ref >= 0) {
        s = "&" + std::to_string(p->ref);
    } else {
        s = p->label.empty() ? "*" : p->label;
    }
    if (!p->factors.empty()) s += "@" + print_value(Value::tuple(p->factors));
    return s;
}

std::string raw_pval(const PV& p, std::size_t depth) {
    switch (p->kind) {
        case PNode::Kind::Leaf:
            return leaf_text(p, depth);
        case PNode::Kind::Send:
            return "(" + print_value(p->value) + ", " + raw_pval(p->next, depth) + ")";
        case PNode::Kind::Table: {
            std::string s = "{";
            for (std::size_t i = 0; i < p->table.size(); ++i) {
                if (i) s += ", ";
                s += print_value(p->table[i].first) + " -> " + raw_pval(p->table[i].second, depth);
            }
            return s + "}";
        }
        case PNode::Kind::Pair:
            if (depth == 0) return "<...>";
            return "<" + raw_pval(p->first->get(), depth - 1) + ", " + raw_pval(p->second->get(), depth - 1) + ">";
        case PNode::Kind::Left:
            return "L " + raw_pval(p->next, depth);
        case PNode::Kind::Right:
            return "R " + raw_pval(p->next, depth);
    }
    return "?";
}

std::string shaped_pval(const PV& p, std::vector<Proto> stack, std::size_t depth) {
    while (!stack.empty() && (stack.back().kind == Proto::Kind::Done || stack.back().kind == Proto::Kind::Seq)) {
        Proto h = stack.back();
        stack.pop_back();
        if (h.kind == Proto::Kind::Seq) {
            for (auto it = h.parts.rbegin(); it != h.parts.rend(); ++it) stack.push_back(*it);
        }
    }
    if (stack.empty()) return leaf_text(p, depth);
    Proto h = stack.back();
    stack.pop_back();
    auto with = [&](std::initializer_list<Proto> more) {
        auto s = stack;
        for (auto it = std::rbegin(more); it != std::rend(more); ++it) s.push_back(*it);
        return s;
    };
    switch (h.kind) {
        case Proto::Kind::Send:
            if (p->kind != PNode::Kind::Send) break;
            return "(" + print_value(p->value) + ", " + shaped_pval(p->next, stack, depth) + ")";
        case Proto::Kind::Recv: {
            if (p->kind != PNode::Kind::Table) break;
            std::string s = "{";
            for (std::size_t i = 0; i < p->table.size(); ++i) {
                if (i) s += ", ";
                s += print_value(p->table[i].first) + " -> " + shaped_pval(p->table[i].second, stack, depth);
            }
            return s + "}";
        }
        case Proto::Kind::Choose:
            if (p->kind != PNode::Kind::Pair) break;
            return "<" + shaped_pval(p->first->get(), with({h.parts[0]}), depth) + ", " +
                   shaped_pval(p->second->get(), with({h.parts[1]}), depth) + ">";
        case Proto::Kind::Offer:
            if (p->kind == PNode::Kind::Left) return "L " + shaped_pval(p->next, with({h.parts[0]}), depth);
            if (p->kind == PNode::Kind::Right) return "R " + shaped_pval(p->next, with({h.parts[1]}), depth);
            break;
        case Proto::Kind::StarP:
            if (p->kind == PNode::Kind::Left) return "stop " + shaped_pval(p->next, stack, depth);
            if (p->kind == PNode::Kind::Right) return "step " + shaped_pval(p->next, with({h.parts[0], h}), depth);
            break;
        case Proto::Kind::StarX:
            if (p->kind != PNode::Kind::Pair) break;
            if (depth == 0) return "#handle(...)";
            return "#handle(" + shaped_pval(p->first->get(), stack, depth - 1) + "; " +
                   shaped_pval(p->second->get(), with({h.parts[0], h}), depth - 1) + ")";
        default:
            break;
    }
    return "?" + raw_pval(p, depth);
}

}  // namespace

std::string print_obj(const Obj& e) { return obj_at(e, 0); }
std::string print_proto(const Proto& p) { return proto_at(p, 0); }
std::string print_mor(const Mor& m) { return mor_at(m, 0); }
std::string print_cell(const Cell& c) { return cell_at(c, 0); }

std::string print_value(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Unit:
            return "()";
        case Value::Kind::Atom:
            return v.atom;
        case Value::Kind::Inl:
            return "inl " + print_value(v.payload());
        case Value::Kind::Inr:
            return "inr " + print_value(v.payload());
        case Value::Kind::Tuple:
        case Value::Kind::List: {
            bool tuple = v.kind == Value::Kind::Tuple;
            std::string s = tuple ? "(" : "[";
            for (std::size_t i = 0; i < v.items.size(); ++i) {
                if (i) s += ", ";
                s += print_value(v.items[i]);
            }
            return s + (tuple ? ")" : "]");
        }
    }
    return "?";
}

std::string print_boundary(const Boundary& b) {
    return "[" + print_proto(fold_stars(b.left)) + " | " + print_obj(b.top) + " -> " + print_obj(b.bottom) + " | " +
           print_proto(fold_stars(b.right)) + "]";
}

std::string print_pval(const PV& p, const Proto& shape, std::size_t depth) {
    return shaped_pval(p, {normalize(shape)}, depth);
}

// ---------------------------------------------------------------------------
// Lexing
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { Ident, Sym, End };
    Kind kind;
    std::string text;
    SrcLoc loc;
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '\'';
}

std::string at(SrcLoc l) { return std::to_string(l.line) + ":" + std::to_string(l.col); }

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        SrcLoc loc{line, col};
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            out.push_back({Token::Kind::Ident, src.substr(i, j - i), loc});
            advance(j - i);
            continue;
        }
        if (src.compare(i, 3, "(+)") == 0) {
            out.push_back({Token::Kind::Sym, "(+)", loc});
            advance(3);
            continue;
        }
        if (src.compare(i, 2, "->") == 0) {
            out.push_back({Token::Kind::Sym, "->", loc});
            advance(2);
            continue;
        }
        static const std::string singles = "(){}[],;:=*+|/^";
        if (singles.find(c) != std::string::npos) {
            out.push_back({Token::Kind::Sym, std::string(1, c), loc});
            advance(1);
            continue;
        }
        throw Error(ErrorKind::Parse, at(loc) + ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({Token::Kind::End, "", {line, col}});
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

class Parser {
public:
    Parser(const std::string& src, Program* prog) : toks_(lex(src)), prog_(prog) {}

    bool done() const { return peek().kind == Token::Kind::End; }

    void expect_end() {
        if (!done()) fail("unexpected '" + peek().text + "'");
    }

    // Objects -------------------------------------------------------------

    Obj obj() {
        Obj e = obj_tensor();
        while (is_sym("(+)")) {
            next();
            e = Obj::sum(e, obj_tensor());
        }
        return e;
    }

    Obj obj_tensor() {
        std::vector<Obj> fs{obj_atom()};
        while (is_sym("*")) {
            next();
            fs.push_back(obj_atom());
        }
        return fs.size() == 1 ? fs[0] : Obj::tensor(fs);
    }

    Obj obj_atom() {
        if (is_sym("(")) {
            next();
            Obj e = obj();
            sym(")");
            return e;
        }
        std::string id = ident("object");
        if (id == "I") return Obj::unit();
        if (id == "stack") return Obj::stack(obj_atom());
        return Obj::gen(id);
    }

    // Values --------------------------------------------------------------

    Value value() {
        if (is_sym("(")) {
            next();
            if (is_sym(")")) {
                next();
                return Value::unit();
            }
            std::vector<Value> xs{value()};
            while (is_sym(",")) {
                next();
                xs.push_back(value());
            }
            sym(")");
            if (xs.size() == 1) return xs[0];
            return Value::tuple(std::move(xs));
        }
        if (is_sym("[")) {
            next();
            std::vector<Value> xs;
            if (!is_sym("]")) {
                xs.push_back(value());
                while (is_sym(",")) {
                    next();
                    xs.push_back(value());
                }
            }
            sym("]");
            return Value::list(std::move(xs));
        }
        std::string id = ident("value");
        if (id == "inl") return Value::inl(value());
        if (id == "inr") return Value::inr(value());
        return Value::atom_of(id);
    }

    // Protocols -----------------------------------------------------------

    Proto proto() {
        Proto p = proto_seq();
        while (true) {
            if (is_ident("x")) {
                next();
                p = Proto::choose(p, proto_seq());
            } else if (is_sym("+")) {
                next();
                p = Proto::offer(p, proto_seq());
            } else {
                return p;
            }
        }
    }

    Proto proto_seq() {
        std::vector<Proto> ps{proto_post()};
        while (is_sym("*")) {
            next();
            ps.push_back(proto_post());
        }
        return ps.size() == 1 ? ps[0] : Proto::seq(ps);
    }

    Proto proto_post() {
        Proto p = proto_atom();
        while (is_sym("^")) {
            next();
            if (is_ident("x")) {
                next();
                p = Proto::star_x(p);
            } else if (is_sym("+")) {
                next();
                p = Proto::star_p(p);
            } else {
                fail("expected 'x' or '+' after '^'");
            }
        }
        return p;
    }

    Proto proto_atom() {
        if (is_sym("(")) {
            next();
            Proto p = proto();
            sym(")");
            return p;
        }
        Token t = peek();
        std::string id = ident("protocol");
        if (id == "I") return Proto::done();
        if (id == "send") return Proto::send(obj_atom());
        if (id == "recv") return Proto::recv(obj_atom());
        if (prog_) {
            auto it = prog_->protocols.find(id);
            if (it != prog_->protocols.end()) return it->second;
        }
        throw Error(ErrorKind::UnknownName, at(t.loc) + ": unknown protocol '" + id + "'");
    }

    // Morphisms -----------------------------------------------------------

    Mor mor() {
        Mor m = mor_tensor();
        while (is_sym(";")) {
            next();
            m = Mor::compose(m, mor_tensor());
        }
        return m;
    }

    Mor mor_tensor() {
        Mor m = mor_atom();
        while (is_sym("*")) {
            next();
            m = Mor::tensor(m, mor_atom());
        }
        return m;
    }

    Mor mor_atom() {
        if (is_sym("(")) {
            next();
            Mor m = mor();
            sym(")");
            return m;
        }
        std::string id = ident("morphism");
        if (id == "id") return Mor::id(obj_args(1)[0]);
        if (id == "braid") {
            auto o = obj_args(2);
            return Mor::braid(o[0], o[1]);
        }
        if (id == "inl" || id == "inr") {
            auto o = obj_args(2);
            return id == "inl" ? Mor::inj0(o[0], o[1]) : Mor::inj1(o[0], o[1]);
        }
        if (id == "copair") {
            sym("(");
            Mor f = mor();
            sym(",");
            Mor g = mor();
            sym(")");
            return Mor::copair(f, g);
        }
        if (id == "distr" || id == "undistr" || id == "distl" || id == "undistl") {
            auto o = obj_args(3);
            if (id == "distr") return Mor::distr(o[0], o[1], o[2]);
            if (id == "undistr") return Mor::undistr(o[0], o[1], o[2]);
            if (id == "distl") return Mor::distl(o[0], o[1], o[2]);
            return Mor::undistl(o[0], o[1], o[2]);
        }
        if (id == "nil") return Mor::nil(obj_args(1)[0]);
        if (id == "push") return Mor::push(obj_args(1)[0]);
        if (id == "pop") return Mor::pop(obj_args(1)[0]);
        if (id == "const") {
            sym("{");
            Obj a = obj();
            sym(",");
            Value v = value();
            sym("}");
            return Mor::constant(a, v);
        }
        return Mor::gen(id);
    }

    // [L | T -> B | R]
    Boundary boundary() {
        sym("[");
        Boundary b;
        b.left = proto();
        sym("|");
        b.top = obj();
        sym("->");
        b.bottom = obj();
        sym("|");
        b.right = proto();
        sym("]");
        return b;
    }

    // Cells ---------------------------------------------------------------

    Cell cell() {
        Cell c = cell_v();
        while (is_sym("|")) {
            SrcLoc loc = next().loc;
            c = Cell::hcomp(c, cell_v()).with_loc(loc);
        }
        return c;
    }

    Cell cell_v() {
        Cell c = cell_atom();
        while (is_sym("/")) {
            SrcLoc loc = next().loc;
            c = Cell::vcomp(c, cell_atom()).with_loc(loc);
        }
        return c;
    }

    Cell cell_atom() {
        SrcLoc loc = peek().loc;
        if (is_sym("(")) {
            next();
            Cell c = cell();
            sym(")");
            return c;
        }
        if (is_sym("[")) {
            next();
            Mor m = mor();
            sym("]");
            return Cell::promote(m).with_loc(loc);
        }
        std::string id = ident("cell");
        try {
            return macro_or_core(id, loc);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::UnknownCell) throw;
            throw Error(e.kind(), std::string(e.what()) + " (in '" + id + "' at " + at(loc) + ")");
        }
    }

    // Declarations --------------------------------------------------------

    void declaration() {
        Token kw = peek();
        std::string k = ident("declaration");
        if (k == "object") {
            std::string name = ident("object name");
            sym(";");
            prog_->val.sig.add_object(name);
        } else if (k == "carrier") {
            std::string name = ident("object name");
            sym("=");
            if (is_ident("list")) {
                next();
                if (!is_ident("of")) fail("expected 'of'");
                next();
                Obj e = obj();
                sym(";");
                prog_->val.set_countable(name, e);
            } else {
                sym("{");
                std::vector<std::string> atoms;
                if (!is_sym("}")) {
                    atoms.push_back(ident("atom"));
                    while (is_sym(",")) {
                        next();
                        atoms.push_back(ident("atom"));
                    }
                }
                sym("}");
                sym(";");
                prog_->val.set_finite(name, atoms);
            }
        } else if (k == "mor") {
            std::string name = ident("morphism name");
            sym(":");
            Obj dom = obj();
            sym("->");
            Obj cod = obj();
            sym(";");
            prog_->val.sig.add_morphism(name, dom, cod);
        } else if (k == "map") {
            std::string name = ident("morphism name");
            sym("=");
            sym("{");
            std::map<Value, Value> table;
            while (!is_sym("}")) {
                Value a = value();
                sym("->");
                Value b = value();
                sym(";");
                if (!table.emplace(a, b).second) {
                    fail("duplicate entry for " + print_value(a) + " in map " + name);
                }
            }
            sym("}");
            sym(";");
            prog_->val.set_map(name, std::move(table));
        } else if (k == "protocol") {
            std::string name = ident("protocol name");
            sym("=");
            Proto p = proto();
            sym(";");
            prog_->protocols[name] = p;
        } else if (k == "cell") {
            std::string name = ident("cell name");
            std::optional<Boundary> declared;
            SrcLoc decl_loc = peek().loc;
            if (is_sym(":")) {
                next();
                declared = boundary();
            }
            sym("=");
            Cell c = cell();
            sym(";");
            if (declared) {
                Boundary got = infer_boundary(c, prog_->val.sig);
                if (!boundary_equal(got, *declared)) {
                    throw Error(ErrorKind::BoundaryMismatch, at(decl_loc) + ": cell '" + name + "' declared " +
                                                                 print_boundary(*declared) + " but is " +
                                                                 print_boundary(got));
                }
            }
            if (prog_->find_cell(name)) {
                throw Error(ErrorKind::Parse, at(kw.loc) + ": cell '" + name + "' declared twice");
            }
            prog_->cells.emplace_back(name, c);
        } else {
            throw Error(ErrorKind::Parse, at(kw.loc) + ": unknown declaration '" + k + "'");
        }
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    bool is_sym(const char* s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }
    bool is_ident(const char* s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, at(peek().loc) + ": " + msg);
    }

    void sym(const char* s) {
        if (!is_sym(s)) {
            fail(std::string("expected '") + s + "', found '" + (done() ? "end of input" : peek().text) + "'");
        }
        next();
    }

    std::string ident(const char* what) {
        if (peek().kind != Token::Kind::Ident) {
            fail(std::string("expected ") + what + ", found '" + (done() ? "end of input" : peek().text) + "'");
        }
        return next().text;
    }

    std::vector<Obj> obj_args(std::size_t n) {
        sym("{");
        std::vector<Obj> out{obj()};
        for (std::size_t i = 1; i < n; ++i) {
            sym(",");
            out.push_back(obj());
        }
        sym("}");
        return out;
    }

    Proto proto_arg() {
        sym("{");
        Proto p = proto();
        sym("}");
        return p;
    }

    std::pair<Proto, Proto> proto_args2() {
        sym("{");
        Proto a = proto();
        sym(",");
        Proto b = proto();
        sym("}");
        return {a, b};
    }

    Obj corner_arg() {
        if (is_sym("{")) return obj_args(1)[0];
        return obj_atom();
    }

    // Arguments are separated by ',' or ';'.
    std::vector<Cell> cell_args(std::size_t n) {
        sym("(");
        std::vector<Cell> out{cell()};
        for (std::size_t i = 1; i < n; ++i) {
            if (is_sym(";")) {
                next();
            } else {
                sym(",");
            }
            out.push_back(cell());
        }
        sym(")");
        return out;
    }

    const Signature& sig() const {
        static const Signature empty;
        return prog_ ? prog_->val.sig : empty;
    }

    Cell macro_or_core(const std::string& id, SrcLoc loc) {
        if (id == "getL") return Cell::get_l(corner_arg()).with_loc(loc);
        if (id == "putR") return Cell::put_r(corner_arg()).with_loc(loc);
        if (id == "getR") return Cell::get_r(corner_arg()).with_loc(loc);
        if (id == "putL") return Cell::put_l(corner_arg()).with_loc(loc);
        if (id == "1" || id == "idV") return Cell::id_v(corner_arg()).with_loc(loc);
        if (id == "id" || id == "idH") {
            if (is_sym("{")) return Cell::id_h(proto_arg()).with_loc(loc);
            return Cell::id_h(proto_post()).with_loc(loc);
        }
        if (id == "pi0" || id == "pi1" || id == "in0" || id == "in1" || id == "inj0" || id == "inj1") {
            auto [u, w] = proto_args2();
            if (id == "pi0") return Cell::pi0(u, w).with_loc(loc);
            if (id == "pi1") return Cell::pi1(u, w).with_loc(loc);
            if (id == "in0" || id == "inj0") return Cell::inj0(u, w).with_loc(loc);
            return Cell::inj1(u, w).with_loc(loc);
        }
        if (id == "times" || id == "plus" || id == "copair") {
            auto k = cell_args(2);
            if (id == "times") return Cell::times(k[0], k[1]).with_loc(loc);
            if (id == "plus") return Cell::plus(k[0], k[1]).with_loc(loc);
            return Cell::copair(k[0], k[1]).with_loc(loc);
        }
        if (id == "iterX" || id == "iterP") {
            auto k = cell_args(3);
            if (id == "iterX") return Cell::iter_x(k[0], k[1], k[2]).with_loc(loc);
            return Cell::iter_p(k[0], k[1], k[2]).with_loc(loc);
        }
        if (id == "cross") {
            sym("{");
            Proto u = proto();
            sym(",");
            Obj a = obj();
            sym("}");
            return crossing(u, a);
        }
        if (id == "tensor") {
            auto k = cell_args(2);
            return tensor_cells(k[0], k[1], sig());
        }
        if (id == "iterXs") return simple_iter_x(cell_args(1)[0], sig());
        if (id == "iterPs") return simple_iter_p(cell_args(1)[0], sig());
        if (id == "deltaX") return comonoid_x(proto_arg()).first;
        if (id == "counitX") return comonoid_x(proto_arg()).second;
        if (id == "nablaP") return monoid_p(proto_arg()).first;
        if (id == "unitP") return monoid_p(proto_arg()).second;
        if (id == "epsX") return comonad_x(proto_arg()).first;
        if (id == "dX") return comonad_x(proto_arg()).second;
        if (id == "etaP") return monad_p(proto_arg()).first;
        if (id == "muP") return monad_p(proto_arg()).second;
        if (id == "sendword") {
            Obj a = obj_args(1)[0];
            sym("[");
            std::vector<Value> w;
            if (!is_sym("]")) {
                w.push_back(value());
                while (is_sym(",")) {
                    next();
                    w.push_back(value());
                }
            }
            sym("]");
            static const Valuation empty;
            return word_sender(w, a, prog_ ? prog_->val : empty);
        }
        if (prog_) {
            if (auto c = prog_->find_cell(id)) return *c;
        }
        throw Error(ErrorKind::UnknownCell, at(loc) + ": unknown cell '" + id + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Program* prog_;
};

}  // namespace

std::optional<Cell> Program::find_cell(const std::string& name) const {
    for (const auto& [n, c] : cells) {
        if (n == name) return c;
    }
    return std::nullopt;
}

Program parse_program(const std::string& text) {
    Program prog;
    Parser p(text, &prog);
    while (!p.done()) p.declaration();
    prog.val.validate();
    return prog;
}

Program load_program(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_program(ss.str());
}

Obj parse_obj(const std::string& text) {
    Parser p(text, nullptr);
    Obj e = p.obj();
    p.expect_end();
    return e;
}

Value parse_value(const std::string& text) {
    Parser p(text, nullptr);
    Value v = p.value();
    p.expect_end();
    return v;
}

Proto parse_proto(const std::string& text, const Program* ctx) {
    Parser p(text, const_cast<Program*>(ctx));
    Proto u = p.proto();
    p.expect_end();
    return u;
}

Mor parse_mor(const std::string& text) {
    Parser p(text, nullptr);
    Mor m = p.mor();
    p.expect_end();
    return m;
}

Cell parse_cell(const std::string& text, const Program* ctx) {
    Parser p(text, const_cast<Program*>(ctx));
    Cell c = p.cell();
    p.expect_end();
    return c;
}

}  // namespace fcn
