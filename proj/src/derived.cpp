#include "fcn/derived.hpp"

#include "fcn/syntax.hpp"

namespace fcn {

Cell crossing(const Proto& u0, const Obj& a) {
    Proto u = normalize(u0);
    switch (u.kind) {
        case Proto::Kind::Done:
            return Cell::id_v(a);
        case Proto::Kind::Send:
            return Cell::vchain({Cell::hcomp(Cell::get_l(u.obj), Cell::id_v(a)),
                                 Cell::promote(Mor::braid(u.obj, a)),
                                 Cell::hcomp(Cell::id_v(a), Cell::put_r(u.obj))});
        case Proto::Kind::Recv:
            return Cell::vchain({Cell::hcomp(Cell::id_v(a), Cell::get_r(u.obj)),
                                 Cell::promote(Mor::braid(a, u.obj)),
                                 Cell::hcomp(Cell::put_l(u.obj), Cell::id_v(a))});
        case Proto::Kind::Seq: {
            std::vector<Cell> rows;
            for (const auto& x : u.parts) rows.push_back(crossing(x, a));
            return Cell::vchain(rows);
        }
        case Proto::Kind::Offer: {
            const Proto& l = u.parts[0];
            const Proto& r = u.parts[1];
            return Cell::plus(Cell::hcomp(crossing(l, a), Cell::inj0(l, r)),
                              Cell::hcomp(crossing(r, a), Cell::inj1(l, r)));
        }
        case Proto::Kind::Choose: {
            const Proto& l = u.parts[0];
            const Proto& r = u.parts[1];
            return Cell::times(Cell::hcomp(Cell::pi0(l, r), crossing(l, a)),
                               Cell::hcomp(Cell::pi1(l, r), crossing(r, a)));
        }
        case Proto::Kind::StarX: {
            Cell inner = crossing(u.parts[0], a);
            return Cell::iter_x(inner, Cell::hcomp(star_pi0(u.parts[0]), Cell::id_v(a)), star_pi1(u.parts[0]));
        }
        case Proto::Kind::StarP: {
            Cell inner = crossing(u.parts[0], a);
            return Cell::iter_p(inner, Cell::hcomp(Cell::id_v(a), star_inj0(u.parts[0])), star_inj1(u.parts[0]));
        }
    }
    throw Error(ErrorKind::Internal, "unhandled protocol kind");
}

Cell tensor_cells(const Cell& a, const Cell& b, const Signature& sig) {
    Boundary ba = infer_boundary(a, sig);
    Boundary bb = infer_boundary(b, sig);
    return Cell::vcomp(Cell::hcomp(a, crossing(ba.right, bb.top)), Cell::hcomp(crossing(bb.left, ba.bottom), b));
}

Cell star_pi0(const Proto& u) { return Cell::pi0(Proto::done(), Proto::seq(u, Proto::star_x(u))); }
Cell star_pi1(const Proto& u) { return Cell::pi1(Proto::done(), Proto::seq(u, Proto::star_x(u))); }
Cell star_inj0(const Proto& u) { return Cell::inj0(Proto::done(), Proto::seq(u, Proto::star_p(u))); }
Cell star_inj1(const Proto& u) { return Cell::inj1(Proto::done(), Proto::seq(u, Proto::star_p(u))); }

namespace {

Boundary square(const Cell& a, const Signature& sig) {
    Boundary b = infer_boundary(a, sig);
    if (!(b.top == b.bottom)) {
        throw Error(ErrorKind::NotSquare, "top " + print_obj(b.top) + " differs from bottom " + print_obj(b.bottom));
    }
    return b;
}

}  // namespace

Cell simple_iter_x(const Cell& a, const Signature& sig) {
    Boundary b = square(a, sig);
    return Cell::iter_x(a, Cell::hcomp(star_pi0(b.left), Cell::id_v(b.top)), star_pi1(b.left));
}

Cell simple_iter_p(const Cell& a, const Signature& sig) {
    Boundary b = square(a, sig);
    return Cell::iter_p(a, Cell::hcomp(Cell::id_v(b.top), star_inj0(b.right)), star_inj1(b.right));
}

CellPair comonoid_x(const Proto& u) {
    Cell delta = Cell::iter_x(Cell::id_h(u), Cell::id_h(Proto::star_x(u)), star_pi1(u));
    return {delta, star_pi0(u)};
}

CellPair monoid_p(const Proto& u) {
    Cell nabla = Cell::iter_p(Cell::id_h(u), Cell::id_h(Proto::star_p(u)), star_inj1(u));
    return {nabla, star_inj0(u)};
}

CellPair comonad_x(const Proto& u) {
    Cell eps = Cell::hcomp(star_pi1(u), Cell::vcomp(Cell::id_h(u), star_pi0(u)));
    Cell d2 = Cell::iter_x(Cell::id_h(Proto::star_x(u)), star_pi0(u), comonoid_x(u).first);
    return {eps, d2};
}

CellPair monad_p(const Proto& u) {
    Cell eta = Cell::hcomp(Cell::vcomp(Cell::id_h(u), star_inj0(u)), star_inj1(u));
    Cell mu = Cell::iter_p(Cell::id_h(Proto::star_p(u)), star_inj0(u), monoid_p(u).first);
    return {eta, mu};
}

CellPair moral_equiv_send(const Obj& a, const Obj& b) {
    Proto sa = Proto::send(a);
    Proto sb = Proto::send(b);
    Cell gamma = Cell::plus(Cell::vcomp(Cell::get_l(a), Cell::promote(Mor::inj0(a, b))),
                            Cell::vcomp(Cell::get_l(b), Cell::promote(Mor::inj1(a, b))));
    Cell delta = Cell::copair(Cell::hcomp(Cell::put_r(a), Cell::inj0(sa, sb)),
                              Cell::hcomp(Cell::put_r(b), Cell::inj1(sa, sb)));
    return {gamma, delta};
}

CellPair moral_iso_send(const Obj& a, const Obj& b) {
    auto [gamma, delta] = moral_equiv_send(a, b);
    Obj s = Obj::sum(a, b);
    return {Cell::vcomp(Cell::get_l(s), delta), Cell::vcomp(gamma, Cell::put_r(s))};
}

CellPair moral_iso_recv(const Obj& a, const Obj& b) {
    Proto ra = Proto::recv(a);
    Proto rb = Proto::recv(b);
    Obj s = Obj::sum(a, b);
    Cell to = Cell::vcomp(Cell::get_r(s), Cell::copair(Cell::hcomp(Cell::pi0(ra, rb), Cell::put_l(a)),
                                                       Cell::hcomp(Cell::pi1(ra, rb), Cell::put_l(b))));
    Cell from = Cell::vcomp(Cell::times(Cell::vcomp(Cell::get_r(a), Cell::promote(Mor::inj0(a, b))),
                                        Cell::vcomp(Cell::get_r(b), Cell::promote(Mor::inj1(a, b)))),
                            Cell::put_l(s));
    return {to, from};
}

Cell word_sender(const std::vector<Value>& w, const Obj& a, const Valuation& val) {
    Proto sa = Proto::send(a);
    Cell acc = star_inj0(sa);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        require_value(*it, a, val, "word letter");
        Cell send = Cell::vcomp(Cell::promote(Mor::constant(a, *it)), Cell::put_r(a));
        acc = Cell::hcomp(Cell::vcomp(send, acc), star_inj1(sa));
    }
    return acc;
}

CellPair crossing_swap(const Cell& alpha, const Obj& c, const Signature& sig) {
    Boundary b = infer_boundary(alpha, sig);
    Cell lhs = Cell::hcomp(crossing(b.left, c), alpha);
    Cell rhs = Cell::vchain({Cell::promote(Mor::braid(c, b.top)), Cell::hcomp(alpha, crossing(b.right, c)),
                             Cell::promote(Mor::braid(b.bottom, c))});
    return {lhs, rhs};
}

}  // namespace fcn
