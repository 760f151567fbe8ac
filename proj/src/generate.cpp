#include "fcn/generate.hpp"

#include <functional>

#include "fcn/derived.hpp"
#include "fcn/syntax.hpp"

namespace fcn {

const char* const kDefaultSignature = R"(# Default signature for `fcn laws` without a file.
object A;
object B;
object C;
carrier A = {a0, a1};
carrier B = {b0, b1, b2};
carrier C = {c0};

mor f : A -> B;
map f = { a0 -> b0; a1 -> b2; };
mor g : B -> A;
map g = { b0 -> a1; b1 -> a0; b2 -> a0; };
mor n : A -> A;
map n = { a0 -> a1; a1 -> a0; };
mor r : B -> B;
map r = { b0 -> b1; b1 -> b2; b2 -> b0; };
mor m : A * B -> B * A;
map m = {
  (a0, b0) -> (b1, a0); (a0, b1) -> (b2, a1); (a0, b2) -> (b0, a0);
  (a1, b0) -> (b0, a1); (a1, b1) -> (b1, a1); (a1, b2) -> (b2, a0);
};
mor e : C -> A;
map e = { c0 -> a1; };
)";

Valuation default_valuation() { return parse_program(kDefaultSignature).val; }

TermGen::TermGen(const Valuation& val, std::uint64_t seed) : val_(val), rng_(seed) {
    for (const auto& name : val.sig.objects) {
        auto it = val.carriers.find(name);
        if (it != val.carriers.end() && it->second.finite && !it->second.atoms.empty() &&
            it->second.atoms.size() <= 3) {
            base_.push_back(Obj::gen(name));
        }
    }
    if (base_.empty()) throw Error(ErrorKind::NotEnumerable, "no finite object with 1..3 values to generate over");
}

Obj TermGen::base() { return base_[below(base_.size())]; }

Obj TermGen::obj(int d) {
    std::size_t k = below(d > 0 ? 8 : 6);
    if (k == 0) return Obj::unit();
    if (k < 5) return base();
    if (k < 7) return Obj::tensor(base(), base());
    return Obj::sum(base(), base());
}

Proto TermGen::proto(int d, bool stars) {
    std::size_t k = below(d > 0 ? (stars ? 9 : 7) : 4);
    switch (k) {
        case 0:
        case 1: return Proto::send(base());
        case 2: return Proto::recv(base());
        case 3: return coin(3) ? Proto::done() : Proto::send(base());
        case 4: return Proto::seq(proto(d - 1, stars), proto(d - 1, stars));
        case 5: return Proto::choose(proto(d - 1, stars), proto(d - 1, stars));
        case 6: return Proto::offer(proto(d - 1, stars), proto(d - 1, stars));
        case 7: return Proto::star_x(proto(d - 1, false));
        default: return Proto::star_p(proto(d - 1, false));
    }
}

Mor TermGen::endo(const Obj& t0) {
    Obj t = normalize_obj(t0);
    std::vector<Mor> opts{Mor::id(t)};
    for (const auto& [name, ty] : val_.sig.morphisms) {
        if (ty.dom == t && ty.cod == t) opts.push_back(Mor::gen(name));
    }
    if (t.kind == Obj::Kind::Tensor && t.args.size() == 2 && t.args[0] == t.args[1]) {
        opts.push_back(Mor::braid(t.args[0], t.args[1]));
    }
    if (t.kind == Obj::Kind::Sum && t.args[0] == t.args[1]) {
        const Obj& x = t.args[0];
        opts.push_back(Mor::copair(Mor::inj1(x, x), Mor::inj0(x, x)));
    }
    return opts[below(opts.size())];
}

Mor TermGen::mor_from(const Obj& dom0, int d) {
    Obj dom = normalize_obj(dom0);
    std::vector<Mor> opts{Mor::id(dom)};
    for (const auto& [name, ty] : val_.sig.morphisms) {
        if (ty.dom == dom) {
            opts.push_back(Mor::gen(name));
            opts.push_back(Mor::gen(name));
        }
    }
    if (dom.kind == Obj::Kind::Tensor) {
        std::size_t cut = 1 + below(dom.args.size() - 1);
        std::vector<Obj> l(dom.args.begin(), dom.args.begin() + static_cast<long>(cut));
        std::vector<Obj> r(dom.args.begin() + static_cast<long>(cut), dom.args.end());
        opts.push_back(Mor::braid(Obj::tensor(l), Obj::tensor(r)));
    }
    if (dom.kind == Obj::Kind::Sum) {
        const Obj& x = dom.args[0];
        const Obj& y = dom.args[1];
        opts.push_back(Mor::copair(Mor::inj1(y, x), Mor::inj0(y, x)));
    }
    if (d > 0 && arity(dom) <= 1 && !dom.is_unit()) {
        Obj o = base();
        opts.push_back(coin(2) ? Mor::inj0(dom, o) : Mor::inj1(o, dom));
    }
    Mor m = opts[below(opts.size())];
    if (d > 0 && coin(3)) {
        Obj cod = infer_mor_type(m, val_.sig).cod;
        return Mor::compose(m, mor_from(cod, d - 1));
    }
    return m;
}

Cell TermGen::hcell(const Proto& left, int d) {
    Proto l = normalize(left);
    std::vector<std::function<Cell()>> opts;
    opts.push_back([&] { return Cell::id_h(l); });
    opts.push_back([&] { return Cell::inj0(l, proto(0, false)); });
    opts.push_back([&] { return Cell::inj1(proto(0, false), l); });
    if (d > 0) opts.push_back([&] { return Cell::times(hcell(l, d - 1), hcell(l, d - 1)); });
    switch (l.kind) {
        case Proto::Kind::Choose:
            opts.push_back([&] { return Cell::pi0(l.parts[0], l.parts[1]); });
            opts.push_back([&] { return Cell::pi1(l.parts[0], l.parts[1]); });
            break;
        case Proto::Kind::Offer:
            opts.push_back([&] { return Cell::plus(Cell::inj0(l.parts[0], l.parts[1]), Cell::inj1(l.parts[0], l.parts[1])); });
            if (d > 0) {
                opts.push_back([&] {
                    Cell hu = hcell(l.parts[0], d - 1);
                    Cell hw = hcell(l.parts[1], d - 1);
                    Proto ru = infer_boundary(hu, val_.sig).right;
                    Proto rw = infer_boundary(hw, val_.sig).right;
                    return Cell::plus(Cell::hcomp(hu, Cell::inj0(ru, rw)), Cell::hcomp(hw, Cell::inj1(ru, rw)));
                });
            }
            break;
        case Proto::Kind::Seq:
            if (d > 0) {
                opts.push_back([&] {
                    std::vector<Proto> rest(l.parts.begin() + 1, l.parts.end());
                    return Cell::vcomp(hcell(l.parts[0], d - 1), hcell(Proto::seq(rest), d - 1));
                });
            }
            break;
        case Proto::Kind::StarX:
            opts.push_back([&] { return comonoid_x(l.parts[0]).first; });
            opts.push_back([&] { return comonad_x(l.parts[0]).first; });
            opts.push_back([&] { return star_pi1(l.parts[0]); });
            if (d > 0) opts.push_back([&] { return simple_iter_x(hcell(l.parts[0], d - 1), val_.sig); });
            break;
        case Proto::Kind::StarP:
            opts.push_back([&] { return monad_p(l).first; });
            if (d > 0) opts.push_back([&] { return simple_iter_p(hcell(l.parts[0], d - 1), val_.sig); });
            break;
        default:
            break;
    }
    Cell c = opts[below(opts.size())]();
    if (d > 0 && coin(4)) c = Cell::hcomp(c, hcell(infer_boundary(c, val_.sig).right, d - 1));
    return c;
}

namespace {

bool unit_obj(const Obj& t) { return normalize_obj(t).is_unit(); }

}  // namespace

Cell TermGen::closed_with_top(const Obj& top, int d) {
    Obj t = normalize_obj(top);
    std::vector<std::function<Cell()>> opts;
    opts.push_back([&] { return Cell::id_v(t); });
    opts.push_back([&] { return Cell::promote(mor_from(t, d)); });
    if (!unit_obj(t)) opts.push_back([&] { return Cell::put_r(t); });
    if (d > 0) {
        opts.push_back([&] {
            Cell c = closed_with_top(t, d - 1);
            return Cell::vcomp(c, Cell::hcomp(Cell::id_v(infer_boundary(c, val_.sig).bottom), Cell::get_r(base())));
        });
        opts.push_back([&] {
            Cell c = closed_with_top(t, d - 1);
            return Cell::hcomp(c, hcell(infer_boundary(c, val_.sig).right, d - 1));
        });
        opts.push_back([&] {
            Cell c = closed_with_top(t, d - 1);
            return Cell::vcomp(c, closed_with_top(infer_boundary(c, val_.sig).bottom, d - 1));
        });
        if (t.kind == Obj::Kind::Tensor) {
            opts.push_back([&] {
                std::size_t cut = 1 + below(t.args.size() - 1);
                std::vector<Obj> l(t.args.begin(), t.args.begin() + static_cast<long>(cut));
                std::vector<Obj> r(t.args.begin() + static_cast<long>(cut), t.args.end());
                return tensor_cells(closed_with_top(Obj::tensor(l), d - 1), closed_with_top(Obj::tensor(r), d - 1),
                                    val_.sig);
            });
        }
        if (t.kind == Obj::Kind::Sum) {
            opts.push_back([&] {
                Cell c = closed_with_top(t, d - 1);
                const Obj& x = t.args[0];
                const Obj& y = t.args[1];
                return Cell::copair(Cell::vcomp(Cell::promote(Mor::inj0(x, y)), c),
                                    Cell::vcomp(Cell::promote(Mor::inj1(x, y)), c));
            });
        }
        if (!unit_obj(t)) {
            opts.push_back([&] {
                Cell step = coin(2) ? Cell::vcomp(Cell::put_r(t), Cell::get_r(t)) : Cell::promote(endo(t));
                return Cell::iter_x(step, closed_with_top(t, d - 1), Cell::id_h(Proto::done()));
            });
        }
    }
    return opts[below(opts.size())]();
}

Cell TermGen::with_left(const Proto& left, int d) {
    Proto l = normalize(left);
    std::vector<std::function<Cell()>> opts;
    opts.push_back([&] { return crossing(l, obj(0)); });
    opts.push_back([&] { return hcell(l, d); });
    if (l.kind == Proto::Kind::Send) opts.push_back([&] { return Cell::get_l(l.obj); });
    if (l.kind == Proto::Kind::Recv) opts.push_back([&] { return Cell::put_l(l.obj); });
    if (l.kind == Proto::Kind::Seq && d > 0) {
        opts.push_back([&] {
            std::vector<Proto> rest(l.parts.begin() + 1, l.parts.end());
            Cell a = with_left(l.parts[0], d - 1);
            return Cell::vcomp(a, crossing(Proto::seq(rest), infer_boundary(a, val_.sig).bottom));
        });
    }
    Cell c = opts[below(opts.size())]();
    if (d > 0) {
        Boundary b = infer_boundary(c, val_.sig);
        switch (below(3)) {
            case 0: return Cell::hcomp(c, with_left(b.right, d - 1));
            case 1: return Cell::vcomp(c, closed_with_top(b.bottom, d - 1));
            default: break;
        }
    }
    return c;
}

Cell TermGen::with_top(const Obj& top, int d) {
    Obj t = normalize_obj(top);
    switch (below(3)) {
        case 0: return closed_with_top(t, d);
        case 1: {
            Proto l = proto(d > 0 ? 1 : 0, stars_);
            Cell x = crossing(l, t);
            if (d > 0 && coin(2)) x = Cell::hcomp(x, hcell(l, d - 1));
            return x;
        }
        default: {
            Cell c = closed_with_top(t, d);
            Boundary b = infer_boundary(c, val_.sig);
            if (d > 0) return Cell::hcomp(c, hcell(b.right, d - 1));
            return c;
        }
    }
}

Cell TermGen::square(const Obj& top, int d) {
    Obj t = normalize_obj(top);
    switch (below(d > 0 ? 7 : 3)) {
        case 0: return Cell::id_v(t);
        case 1: return Cell::promote(endo(t));
        case 2: return crossing(proto(0, false), t);
        case 3: return Cell::vcomp(square(t, d - 1), square(t, d - 1));
        case 4: {
            Cell s = square(t, d - 1);
            return Cell::hcomp(s, hcell(infer_boundary(s, val_.sig).right, d - 1));
        }
        case 5: return simple_iter_x(square(t, d - 1), val_.sig);
        default: return simple_iter_p(square(t, d - 1), val_.sig);
    }
}

Cell TermGen::cell(int d, bool stars) {
    bool saved = stars_;
    stars_ = stars;
    Cell c;
    switch (below(4)) {
        case 0: c = with_left(proto(1, stars), d); break;
        case 1: c = with_top(obj(1), d); break;
        case 2: c = stars ? square(obj(0), d) : closed_with_top(obj(1), d); break;
        default: c = with_left(proto(0, false), d); break;
    }
    stars_ = saved;
    // Keep iteration-free requests honest: square() may introduce iterators.
    if (!stars) {
        Boundary b = infer_boundary(c, val_.sig);
        if (!iteration_free(b.left) || !iteration_free(b.right)) return cell(d, stars);
    }
    return c;
}

Cell TermGen::redex_cell(int d) {
    Obj a = base();
    Cell core;
    switch (below(11)) {
        case 0: core = Cell::hcomp(Cell::put_r(a), Cell::get_l(a)); break;
        case 1: core = Cell::vcomp(Cell::get_l(a), Cell::put_r(a)); break;
        case 2: core = Cell::hcomp(Cell::get_r(a), Cell::put_l(a)); break;
        case 3: core = Cell::vcomp(Cell::get_r(a), Cell::put_l(a)); break;
        case 4: {
            Mor f = mor_from(a, 1);
            core = Cell::vcomp(Cell::promote(f), Cell::promote(mor_from(infer_mor_type(f, val_.sig).cod, 1)));
            break;
        }
        case 5: core = Cell::hcomp(Cell::promote(mor_from(a, 1)), Cell::promote(mor_from(base(), 1))); break;
        case 6: {
            Cell x = cell(d, false);
            Cell h = hcell(infer_boundary(x, val_.sig).right, 0);
            Cell y = Cell::hcomp(x, h);
            Boundary bx = infer_boundary(x, val_.sig);
            Boundary by = infer_boundary(y, val_.sig);
            core = Cell::hcomp(Cell::times(x, y), coin(2) ? Cell::pi0(bx.right, by.right) : Cell::pi1(bx.right, by.right));
            break;
        }
        case 7: {
            Cell x = cell(d, false);
            Boundary bx = infer_boundary(x, val_.sig);
            Proto w = proto(0, false);
            Cell y = Cell::hcomp(Cell::pi0(bx.left, w), x);
            core = Cell::hcomp(coin(2) ? Cell::inj0(bx.left, Proto::choose(bx.left, w))
                                       : Cell::inj1(bx.left, Proto::choose(bx.left, w)),
                               Cell::plus(x, y));
            break;
        }
        case 8: {
            Obj b = base();
            Cell x = closed_with_top(Obj::sum(a, b), d);
            Cell c0 = Cell::vcomp(Cell::promote(Mor::inj0(a, b)), x);
            Cell c1 = Cell::vcomp(Cell::promote(Mor::inj1(a, b)), x);
            core = Cell::vcomp(Cell::promote(coin(2) ? Mor::inj0(a, b) : Mor::inj1(a, b)), Cell::copair(c0, c1));
            break;
        }
        case 9: {
            Cell it = simple_iter_x(square(a, 0), val_.sig);
            Proto u = infer_boundary(it.kid(0), val_.sig).right;
            Proto k = infer_boundary(it.kid(1), val_.sig).right;
            Cell sel = coin(2) ? star_pi0(u) : star_pi1(u);
            core = Cell::hcomp(it, Cell::vcomp(sel, Cell::id_h(k)));
            break;
        }
        default: {
            Cell it = simple_iter_p(square(a, 0), val_.sig);
            Proto u = infer_boundary(it.kid(0), val_.sig).left;
            Proto k = infer_boundary(it.kid(1), val_.sig).left;
            Cell sel = coin(2) ? star_inj0(u) : star_inj1(u);
            core = Cell::hcomp(Cell::vcomp(sel, Cell::id_h(k)), it);
            break;
        }
    }
    Boundary b = infer_boundary(core, val_.sig);
    switch (below(4)) {
        case 0: return Cell::hcomp(core, with_left(b.right, 0));
        case 1: return Cell::vcomp(core, closed_with_top(b.bottom, 0));
        case 2: return Cell::vcomp(Cell::id_v(b.top), Cell::hcomp(Cell::id_h(b.left), core));
        default: return core;
    }
}

Cell Mealy::machine() const {
    return Cell::vchain({Cell::hcomp(Cell::get_l(a), Cell::id_v(s)), Cell::promote(Mor::gen("m")),
                         Cell::hcomp(Cell::id_v(s), Cell::put_r(b))});
}

std::pair<std::vector<Value>, Value> Mealy::run(const std::vector<Value>& word, const Value& s0) const {
    std::vector<Value> out;
    Value st = s0;
    for (const auto& x : word) {
        const auto& [next, y] = step.at({x, st});
        out.push_back(y);
        st = next;
    }
    return {out, st};
}

Mealy random_mealy(Rng& rng, std::size_t max_size) {
    Mealy m;
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    auto atoms = [&](const std::string& prefix, std::vector<Value>& vals) {
        std::vector<std::string> names;
        std::size_t n = 1 + pick(max_size);
        for (std::size_t i = 0; i < n; ++i) {
            names.push_back(prefix + std::to_string(i));
            vals.push_back(Value::atom_of(names.back()));
        }
        return names;
    };
    m.a = Obj::gen("A");
    m.s = Obj::gen("S");
    m.b = Obj::gen("B");
    for (const char* o : {"A", "S", "B"}) m.val.sig.add_object(o);
    m.val.set_finite("A", atoms("a", m.inputs));
    m.val.set_finite("S", atoms("s", m.states));
    m.val.set_finite("B", atoms("b", m.outputs));
    m.val.sig.add_morphism("m", Obj::tensor(m.a, m.s), Obj::tensor(m.s, m.b));
    std::map<Value, Value> table;
    for (const auto& x : m.inputs) {
        for (const auto& st : m.states) {
            Value next = m.states[pick(m.states.size())];
            Value y = m.outputs[pick(m.outputs.size())];
            m.step[{x, st}] = {next, y};
            table[Value::tuple({x, st})] = Value::tuple({next, y});
        }
    }
    m.val.set_map("m", std::move(table));
    m.val.validate();
    return m;
}

}  // namespace fcn
