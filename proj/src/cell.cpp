#include "fcn/cell.hpp"

#include "fcn/syntax.hpp"

namespace fcn {

bool boundary_equal(const Boundary& a, const Boundary& b) {
    return a.top == b.top && a.bottom == b.bottom && proto_equal(a.left, b.left) &&
           proto_equal(a.right, b.right);
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Cell Cell::make(Node n) { return Cell(std::make_shared<const Node>(std::move(n))); }

namespace {

Cell::Node leaf(Cell::Kind k) {
    Cell::Node n;
    n.kind = k;
    return n;
}

}  // namespace

Cell Cell::promote(Mor f) {
    Node n = leaf(Kind::Promote);
    n.mor = std::move(f);
    return make(std::move(n));
}

#define FCN_OBJ_CELL(fn, K)               \
    Cell Cell::fn(Obj a) {                \
        Node n = leaf(Kind::K);           \
        n.obj = normalize_obj(a);         \
        return make(std::move(n));        \
    }

FCN_OBJ_CELL(get_l, GetL)
FCN_OBJ_CELL(put_r, PutR)
FCN_OBJ_CELL(get_r, GetR)
FCN_OBJ_CELL(put_l, PutL)
FCN_OBJ_CELL(id_v, IdV)
#undef FCN_OBJ_CELL

Cell Cell::id_h(Proto u) {
    Node n = leaf(Kind::IdH);
    n.p0 = normalize(u);
    return make(std::move(n));
}

#define FCN_PROTO2_CELL(fn, K)            \
    Cell Cell::fn(Proto u, Proto w) {     \
        Node n = leaf(Kind::K);           \
        n.p0 = normalize(u);              \
        n.p1 = normalize(w);              \
        return make(std::move(n));        \
    }

FCN_PROTO2_CELL(pi0, Pi0)
FCN_PROTO2_CELL(pi1, Pi1)
FCN_PROTO2_CELL(inj0, Inj0)
FCN_PROTO2_CELL(inj1, Inj1)
#undef FCN_PROTO2_CELL

#define FCN_KIDS_CELL2(fn, K)             \
    Cell Cell::fn(Cell a, Cell b) {       \
        Node n = leaf(Kind::K);           \
        n.kids = {std::move(a), std::move(b)}; \
        return make(std::move(n));        \
    }

FCN_KIDS_CELL2(hcomp, HComp)
FCN_KIDS_CELL2(vcomp, VComp)
FCN_KIDS_CELL2(times, Times)
FCN_KIDS_CELL2(plus, Plus)
FCN_KIDS_CELL2(copair, CopairC)
#undef FCN_KIDS_CELL2

Cell Cell::iter_x(Cell alpha, Cell f, Cell g) {
    Node n = leaf(Kind::IterX);
    n.kids = {std::move(alpha), std::move(f), std::move(g)};
    return make(std::move(n));
}

Cell Cell::iter_p(Cell alpha, Cell f, Cell g) {
    Node n = leaf(Kind::IterP);
    n.kids = {std::move(alpha), std::move(f), std::move(g)};
    return make(std::move(n));
}

Cell Cell::hchain(const std::vector<Cell>& cs) {
    if (cs.empty()) return id_h(Proto::done());
    Cell acc = cs.front();
    for (std::size_t i = 1; i < cs.size(); ++i) acc = hcomp(acc, cs[i]);
    return acc;
}

Cell Cell::vchain(const std::vector<Cell>& cs) {
    if (cs.empty()) return id_h(Proto::done());
    Cell acc = cs.front();
    for (std::size_t i = 1; i < cs.size(); ++i) acc = vcomp(acc, cs[i]);
    return acc;
}

Cell Cell::with_loc(SrcLoc loc) const {
    Node n = *node_;
    n.loc = loc;
    return make(std::move(n));
}

Cell Cell::with_kids(std::vector<Cell> kids) const {
    Node n = *node_;
    n.kids = std::move(kids);
    return make(std::move(n));
}

bool Cell::operator==(const Cell& other) const {
    if (node_ == other.node_) return true;
    if (!node_ || !other.node_) return false;
    const Node& a = *node_;
    const Node& b = *other.node_;
    if (a.kind != b.kind || !(a.mor == b.mor) || !(a.obj == b.obj) || !(a.p0 == b.p0) || !(a.p1 == b.p1) ||
        a.kids.size() != b.kids.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.kids.size(); ++i) {
        if (a.kids[i] != b.kids[i]) return false;
    }
    return true;
}

std::size_t Cell::size() const {
    std::size_t n = 1;
    for (const auto& k : node_->kids) n += k.size();
    return n;
}

std::vector<Cell> hfactors(const Cell& c) {
    if (c.kind() != Cell::Kind::HComp) return {c};
    auto l = hfactors(c.kid(0));
    auto r = hfactors(c.kid(1));
    l.insert(l.end(), r.begin(), r.end());
    return l;
}

std::vector<Cell> vfactors(const Cell& c) {
    if (c.kind() != Cell::Kind::VComp) return {c};
    auto l = vfactors(c.kid(0));
    auto r = vfactors(c.kid(1));
    l.insert(l.end(), r.begin(), r.end());
    return l;
}

// ---------------------------------------------------------------------------
// Typing
// ---------------------------------------------------------------------------

namespace {

std::string site(const Cell& c, const std::string& what) {
    std::string s = what;
    if (c.node().loc.known()) {
        s += " at " + std::to_string(c.node().loc.line) + ":" + std::to_string(c.node().loc.col);
    }
    return s;
}

[[noreturn]] void mismatch(const Cell& c, const std::string& what, const std::string& expected,
                           const std::string& found) {
    throw Error(ErrorKind::BoundaryMismatch,
                site(c, what) + ": expected " + expected + ", found " + found);
}

void expect_proto(const Cell& c, const std::string& what, const Proto& expected, const Proto& found) {
    if (!proto_equal(expected, found)) mismatch(c, what, print_proto(expected), print_proto(found));
}

void expect_obj(const Cell& c, const std::string& what, const Obj& expected, const Obj& found) {
    if (!(expected == found)) mismatch(c, what, print_obj(expected), print_obj(found));
}

}  // namespace

Boundary infer_boundary(const Cell& c, const Signature& sig) {
    using K = Cell::Kind;
    const auto& n = c.node();
    const Proto I = Proto::done();
    const Obj U = Obj::unit();
    switch (n.kind) {
        case K::Promote: {
            MorType t;
            try {
                t = infer_mor_type(n.mor, sig);
            } catch (const Error& e) {
                throw Error(e.kind(), site(c, "promote") + ": " + e.what());
            }
            return {I, t.dom, t.cod, I};
        }
        case K::GetL:
            sig.check_obj(n.obj);
            return {Proto::send(n.obj), U, n.obj, I};
        case K::PutR:
            sig.check_obj(n.obj);
            return {I, n.obj, U, Proto::send(n.obj)};
        case K::GetR:
            sig.check_obj(n.obj);
            return {I, U, n.obj, Proto::recv(n.obj)};
        case K::PutL:
            sig.check_obj(n.obj);
            return {Proto::recv(n.obj), n.obj, U, I};
        case K::IdV:
            sig.check_obj(n.obj);
            return {I, n.obj, n.obj, I};
        case K::IdH:
            return {n.p0, U, U, n.p0};
        case K::HComp: {
            auto a = infer_boundary(c.kid(0), sig);
            auto b = infer_boundary(c.kid(1), sig);
            expect_proto(c, "horizontal composite '|'", a.right, b.left);
            return {a.left, Obj::tensor(a.top, b.top), Obj::tensor(a.bottom, b.bottom), b.right};
        }
        case K::VComp: {
            auto a = infer_boundary(c.kid(0), sig);
            auto b = infer_boundary(c.kid(1), sig);
            expect_obj(c, "vertical composite '/'", a.bottom, b.top);
            return {Proto::seq(a.left, b.left), a.top, b.bottom, Proto::seq(a.right, b.right)};
        }
        case K::Pi0:
            return {Proto::choose(n.p0, n.p1), U, U, n.p0};
        case K::Pi1:
            return {Proto::choose(n.p0, n.p1), U, U, n.p1};
        case K::Inj0:
            return {n.p0, U, U, Proto::offer(n.p0, n.p1)};
        case K::Inj1:
            return {n.p1, U, U, Proto::offer(n.p0, n.p1)};
        case K::Times: {
            auto a = infer_boundary(c.kid(0), sig);
            auto b = infer_boundary(c.kid(1), sig);
            expect_proto(c, "times left boundary", a.left, b.left);
            expect_obj(c, "times top boundary", a.top, b.top);
            expect_obj(c, "times bottom boundary", a.bottom, b.bottom);
            return {a.left, a.top, a.bottom, Proto::choose(a.right, b.right)};
        }
        case K::Plus: {
            auto a = infer_boundary(c.kid(0), sig);
            auto b = infer_boundary(c.kid(1), sig);
            expect_proto(c, "plus right boundary", a.right, b.right);
            expect_obj(c, "plus top boundary", a.top, b.top);
            expect_obj(c, "plus bottom boundary", a.bottom, b.bottom);
            return {Proto::offer(a.left, b.left), a.top, a.bottom, a.right};
        }
        case K::CopairC: {
            auto a = infer_boundary(c.kid(0), sig);
            auto b = infer_boundary(c.kid(1), sig);
            expect_proto(c, "copair left boundary", a.left, b.left);
            expect_obj(c, "copair bottom boundary", a.bottom, b.bottom);
            expect_proto(c, "copair right boundary", a.right, b.right);
            return {a.left, Obj::sum(a.top, b.top), a.bottom, a.right};
        }
        case K::IterX: {
            auto al = infer_boundary(c.kid(0), sig);
            auto f = infer_boundary(c.kid(1), sig);
            auto g = infer_boundary(c.kid(2), sig);
            expect_obj(c, "iterX step top/bottom", al.top, al.bottom);
            expect_obj(c, "iterX base top", al.top, f.top);
            expect_proto(c, "iterX coalgebra left", f.left, g.left);
            expect_obj(c, "iterX coalgebra top", U, g.top);
            expect_obj(c, "iterX coalgebra bottom", U, g.bottom);
            expect_proto(c, "iterX coalgebra right", Proto::seq(al.left, f.left), g.right);
            return {f.left, al.top, f.bottom, Proto::seq(Proto::star_x(al.right), f.right)};
        }
        case K::IterP: {
            auto al = infer_boundary(c.kid(0), sig);
            auto f = infer_boundary(c.kid(1), sig);
            auto g = infer_boundary(c.kid(2), sig);
            expect_obj(c, "iterP step top/bottom", al.top, al.bottom);
            expect_obj(c, "iterP base top", al.top, f.top);
            expect_proto(c, "iterP algebra right", f.right, g.right);
            expect_obj(c, "iterP algebra top", U, g.top);
            expect_obj(c, "iterP algebra bottom", U, g.bottom);
            expect_proto(c, "iterP algebra left", Proto::seq(al.right, f.right), g.left);
            return {Proto::seq(Proto::star_p(al.left), f.left), al.top, f.bottom, f.right};
        }
    }
    throw Error(ErrorKind::Internal, "unhandled cell kind");
}

bool check_closed_left(const Cell& c, const Signature& sig) {
    return proto_equal(infer_boundary(c, sig).left, Proto::done());
}

}  // namespace fcn
