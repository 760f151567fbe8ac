#include "fcn/signature.hpp"

#include <algorithm>
#include <sstream>

#include "fcn/syntax.hpp"

namespace fcn {

std::strong_ordering Obj::operator<=>(const Obj& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (auto c = name <=> o.name; c != 0) return c;
    return detail::compare_seq(args, o.args);
}

std::strong_ordering Value::operator<=>(const Value& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (auto c = atom <=> o.atom; c != 0) return c;
    return detail::compare_seq(items, o.items);
}

std::strong_ordering Mor::operator<=>(const Mor& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (auto c = name <=> o.name; c != 0) return c;
    if (auto c = detail::compare_seq(objs, o.objs); c != 0) return c;
    if (auto c = detail::compare_seq(subs, o.subs); c != 0) return c;
    return value <=> o.value;
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::CompositionMismatch: return "CompositionMismatch";
        case ErrorKind::IllTypedValue: return "IllTypedValue";
        case ErrorKind::NotEnumerable: return "NotEnumerable";
        case ErrorKind::NotAStar: return "NotAStar";
        case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorKind::IllTypedSubterm: return "IllTypedSubterm";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::InfiniteRecvCarrier: return "InfiniteRecvCarrier";
        case ErrorKind::NotClosedLeft: return "NotClosedLeft";
        case ErrorKind::ScriptUnderrun: return "ScriptUnderrun";
        case ErrorKind::ScriptOverrun: return "ScriptOverrun";
        case ErrorKind::WrongMove: return "WrongMove";
        case ErrorKind::DepthExceeded: return "DepthExceeded";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::UnknownCell: return "UnknownCell";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

// ---------------------------------------------------------------------------
// Obj
// ---------------------------------------------------------------------------

Obj Obj::gen(std::string name) {
    Obj o;
    o.kind = Kind::Gen;
    o.name = std::move(name);
    return o;
}

Obj Obj::unit() { return Obj{}; }

Obj Obj::raw_tensor(std::vector<Obj> factors) {
    Obj o;
    o.kind = Kind::Tensor;
    o.args = std::move(factors);
    return o;
}

Obj Obj::tensor(std::vector<Obj> factors) {
    std::vector<Obj> flat;
    for (auto& f : factors) {
        Obj n = normalize_obj(f);
        if (n.kind == Kind::Unit) continue;
        if (n.kind == Kind::Tensor) {
            flat.insert(flat.end(), n.args.begin(), n.args.end());
        } else {
            flat.push_back(std::move(n));
        }
    }
    if (flat.empty()) return unit();
    if (flat.size() == 1) return flat.front();
    return raw_tensor(std::move(flat));
}

Obj Obj::sum(Obj a, Obj b) {
    Obj o;
    o.kind = Kind::Sum;
    o.args = {normalize_obj(a), normalize_obj(b)};
    return o;
}

Obj Obj::stack(Obj a) {
    Obj o;
    o.kind = Kind::Stack;
    o.args = {normalize_obj(a)};
    return o;
}

Obj normalize_obj(const Obj& e) {
    switch (e.kind) {
        case Obj::Kind::Gen:
        case Obj::Kind::Unit:
            return e;
        case Obj::Kind::Tensor:
            return Obj::tensor(e.args);
        case Obj::Kind::Sum:
            return Obj::sum(e.args.at(0), e.args.at(1));
        case Obj::Kind::Stack:
            return Obj::stack(e.args.at(0));
    }
    return e;
}

std::size_t arity(const Obj& e) {
    if (e.kind == Obj::Kind::Unit) return 0;
    if (e.kind == Obj::Kind::Tensor) return e.args.size();
    return 1;
}

std::vector<Obj> obj_factors(const Obj& e) {
    if (e.kind == Obj::Kind::Unit) return {};
    if (e.kind == Obj::Kind::Tensor) return e.args;
    return {e};
}

// ---------------------------------------------------------------------------
// Value
// ---------------------------------------------------------------------------

Value Value::atom_of(std::string a) {
    Value v;
    v.kind = Kind::Atom;
    v.atom = std::move(a);
    return v;
}

Value Value::inl(Value x) {
    Value v;
    v.kind = Kind::Inl;
    v.items.push_back(std::move(x));
    return v;
}

Value Value::inr(Value x) {
    Value v;
    v.kind = Kind::Inr;
    v.items.push_back(std::move(x));
    return v;
}

Value Value::list(std::vector<Value> xs) {
    Value v;
    v.kind = Kind::List;
    v.items = std::move(xs);
    return v;
}

Value Value::tuple(std::vector<Value> xs) {
    std::vector<Value> flat;
    for (auto& x : xs) {
        if (x.kind == Kind::Unit) continue;
        if (x.kind == Kind::Tuple) {
            flat.insert(flat.end(), x.items.begin(), x.items.end());
        } else {
            flat.push_back(std::move(x));
        }
    }
    if (flat.empty()) return unit();
    if (flat.size() == 1) return flat.front();
    Value v;
    v.kind = Kind::Tuple;
    v.items = std::move(flat);
    return v;
}

std::vector<Value> value_factors(const Value& v) {
    if (v.kind == Value::Kind::Unit) return {};
    if (v.kind == Value::Kind::Tuple) return v.items;
    return {v};
}

std::pair<Value, Value> split_value(const Value& v, std::size_t left_arity) {
    auto fs = value_factors(v);
    if (left_arity > fs.size()) {
        throw Error(ErrorKind::IllTypedValue, "cannot split " + print_value(v) + " after " +
                                                  std::to_string(left_arity) + " factors");
    }
    std::vector<Value> l(fs.begin(), fs.begin() + static_cast<long>(left_arity));
    std::vector<Value> r(fs.begin() + static_cast<long>(left_arity), fs.end());
    return {Value::tuple(std::move(l)), Value::tuple(std::move(r))};
}

Value join_values(const Value& a, const Value& b) { return Value::tuple({a, b}); }

// ---------------------------------------------------------------------------
// Mor
// ---------------------------------------------------------------------------

namespace {

Mor mk(Mor::Kind k, std::vector<Obj> objs = {}, std::vector<Mor> subs = {}) {
    Mor m;
    m.kind = k;
    for (auto& o : objs) o = normalize_obj(o);
    m.objs = std::move(objs);
    m.subs = std::move(subs);
    return m;
}

}  // namespace

Mor Mor::gen(std::string name) {
    Mor m;
    m.kind = Kind::Gen;
    m.name = std::move(name);
    return m;
}
Mor Mor::id(Obj a) { return mk(Kind::Id, {std::move(a)}); }
Mor Mor::compose(Mor f, Mor g) { return mk(Kind::Compose, {}, {std::move(f), std::move(g)}); }
Mor Mor::tensor(Mor f, Mor g) { return mk(Kind::Tensor, {}, {std::move(f), std::move(g)}); }
Mor Mor::braid(Obj a, Obj b) { return mk(Kind::Braid, {std::move(a), std::move(b)}); }
Mor Mor::inj0(Obj a, Obj b) { return mk(Kind::Inj0, {std::move(a), std::move(b)}); }
Mor Mor::inj1(Obj a, Obj b) { return mk(Kind::Inj1, {std::move(a), std::move(b)}); }
Mor Mor::copair(Mor f, Mor g) { return mk(Kind::Copair, {}, {std::move(f), std::move(g)}); }
Mor Mor::distr(Obj a, Obj b, Obj c) { return mk(Kind::DistR, {std::move(a), std::move(b), std::move(c)}); }
Mor Mor::undistr(Obj a, Obj b, Obj c) { return mk(Kind::UndistR, {std::move(a), std::move(b), std::move(c)}); }
Mor Mor::distl(Obj a, Obj b, Obj c) { return mk(Kind::DistL, {std::move(a), std::move(b), std::move(c)}); }
Mor Mor::undistl(Obj a, Obj b, Obj c) { return mk(Kind::UndistL, {std::move(a), std::move(b), std::move(c)}); }
Mor Mor::nil(Obj a) { return mk(Kind::Nil, {std::move(a)}); }
Mor Mor::push(Obj a) { return mk(Kind::Push, {std::move(a)}); }
Mor Mor::pop(Obj a) { return mk(Kind::Pop, {std::move(a)}); }
Mor Mor::constant(Obj a, Value v) {
    Mor m = mk(Kind::Const, {std::move(a)});
    m.value = std::move(v);
    return m;
}

// ---------------------------------------------------------------------------
// Signature / valuation
// ---------------------------------------------------------------------------

void Signature::check_obj(const Obj& e) const {
    switch (e.kind) {
        case Obj::Kind::Gen:
            if (!has_object(e.name)) throw Error(ErrorKind::UnknownName, "object '" + e.name + "'");
            return;
        case Obj::Kind::Unit:
            return;
        default:
            for (const auto& a : e.args) check_obj(a);
    }
}

void Signature::add_morphism(const std::string& name, Obj dom, Obj cod) {
    dom = normalize_obj(dom);
    cod = normalize_obj(cod);
    check_obj(dom);
    check_obj(cod);
    morphisms[name] = MorType{std::move(dom), std::move(cod)};
}

namespace {

void collect_stacks(const Obj& e, std::set<Obj>& out) {
    if (e.kind == Obj::Kind::Stack) out.insert(e);
    for (const auto& a : e.args) collect_stacks(a, out);
}

}  // namespace

std::set<Obj> Signature::stack_objects() const {
    std::set<Obj> out;
    for (const auto& [name, t] : morphisms) {
        collect_stacks(t.dom, out);
        collect_stacks(t.cod, out);
    }
    return out;
}

void Valuation::set_finite(const std::string& obj, std::vector<std::string> atoms) {
    Carrier c;
    c.finite = true;
    c.atoms = std::move(atoms);
    carriers[obj] = std::move(c);
}

void Valuation::set_countable(const std::string& obj, Obj element) {
    Carrier c;
    c.finite = false;
    c.element = normalize_obj(element);
    carriers[obj] = std::move(c);
}

void Valuation::set_map(const std::string& mor, std::map<Value, Value> table) {
    mor_maps[mor] = std::move(table);
}

void Valuation::validate() const {
    for (const auto& [name, c] : carriers) {
        if (!sig.has_object(name)) throw Error(ErrorKind::UnknownName, "carrier for undeclared object '" + name + "'");
        if (!c.finite) continue;
        if (c.atoms.empty()) throw Error(ErrorKind::IllTypedValue, "carrier of '" + name + "' is empty");
        std::set<std::string> seen(c.atoms.begin(), c.atoms.end());
        if (seen.size() != c.atoms.size()) {
            throw Error(ErrorKind::IllTypedValue, "carrier of '" + name + "' has duplicates");
        }
    }
    for (const auto& name : sig.objects) {
        if (!carriers.count(name)) throw Error(ErrorKind::UnknownName, "object '" + name + "' has no carrier");
    }
    for (const auto& [name, t] : sig.morphisms) {
        auto it = mor_maps.find(name);
        if (it == mor_maps.end()) throw Error(ErrorKind::UnknownName, "morphism '" + name + "' has no map");
        for (const auto& [in, out] : it->second) {
            require_value(in, t.dom, *this, "map " + name);
            require_value(out, t.cod, *this, "map " + name);
        }
        if (is_enumerable(t.dom, *this)) {
            for (const auto& v : enumerate_values(t.dom, *this)) {
                if (!it->second.count(v)) {
                    throw Error(ErrorKind::IllTypedValue,
                                "map " + name + " is not total: missing " + print_value(v));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Typing
// ---------------------------------------------------------------------------

MorType infer_mor_type(const Mor& m, const Signature& sig) {
    using K = Mor::Kind;
    for (const auto& o : m.objs) sig.check_obj(o);
    const auto& o = m.objs;
    switch (m.kind) {
        case K::Gen: {
            auto it = sig.morphisms.find(m.name);
            if (it == sig.morphisms.end()) throw Error(ErrorKind::UnknownName, "morphism '" + m.name + "'");
            return it->second;
        }
        case K::Id:
            return {o[0], o[0]};
        case K::Compose: {
            auto f = infer_mor_type(m.subs[0], sig);
            auto g = infer_mor_type(m.subs[1], sig);
            if (!(f.cod == g.dom)) {
                throw Error(ErrorKind::CompositionMismatch,
                            "expected " + print_obj(f.cod) + ", found " + print_obj(g.dom));
            }
            return {f.dom, g.cod};
        }
        case K::Tensor: {
            auto f = infer_mor_type(m.subs[0], sig);
            auto g = infer_mor_type(m.subs[1], sig);
            return {Obj::tensor(f.dom, g.dom), Obj::tensor(f.cod, g.cod)};
        }
        case K::Braid:
            return {Obj::tensor(o[0], o[1]), Obj::tensor(o[1], o[0])};
        case K::Inj0:
            return {o[0], Obj::sum(o[0], o[1])};
        case K::Inj1:
            return {o[1], Obj::sum(o[0], o[1])};
        case K::Copair: {
            auto f = infer_mor_type(m.subs[0], sig);
            auto g = infer_mor_type(m.subs[1], sig);
            if (!(f.cod == g.cod)) {
                throw Error(ErrorKind::CompositionMismatch,
                            "expected " + print_obj(f.cod) + ", found " + print_obj(g.cod));
            }
            return {Obj::sum(f.dom, g.dom), f.cod};
        }
        case K::DistR:
        case K::UndistR: {
            Obj a = Obj::tensor(Obj::sum(o[0], o[1]), o[2]);
            Obj b = Obj::sum(Obj::tensor(o[0], o[2]), Obj::tensor(o[1], o[2]));
            return m.kind == K::DistR ? MorType{a, b} : MorType{b, a};
        }
        case K::DistL:
        case K::UndistL: {
            Obj a = Obj::tensor(o[0], Obj::sum(o[1], o[2]));
            Obj b = Obj::sum(Obj::tensor(o[0], o[1]), Obj::tensor(o[0], o[2]));
            return m.kind == K::DistL ? MorType{a, b} : MorType{b, a};
        }
        case K::Nil:
            return {Obj::unit(), Obj::stack(o[0])};
        case K::Push:
            return {Obj::tensor(o[0], Obj::stack(o[0])), Obj::stack(o[0])};
        case K::Pop:
            return {Obj::stack(o[0]), Obj::sum(Obj::unit(), Obj::tensor(o[0], Obj::stack(o[0])))};
        case K::Const:
            return {Obj::unit(), o[0]};
    }
    throw Error(ErrorKind::Internal, "unhandled morphism kind");
}

// ---------------------------------------------------------------------------
// Values against objects
// ---------------------------------------------------------------------------

namespace {

bool atomic_checks(const Value& v, const Obj& e, const Valuation& val) {
    switch (e.kind) {
        case Obj::Kind::Gen: {
            auto it = val.carriers.find(e.name);
            if (it == val.carriers.end()) return false;
            const Carrier& c = it->second;
            if (c.finite) {
                return v.kind == Value::Kind::Atom &&
                       std::find(c.atoms.begin(), c.atoms.end(), v.atom) != c.atoms.end();
            }
            if (v.kind != Value::Kind::List) return false;
            for (const auto& x : v.items) {
                if (!value_checks(x, c.element, val)) return false;
            }
            return true;
        }
        case Obj::Kind::Sum:
            if (v.kind == Value::Kind::Inl) return value_checks(v.payload(), e.args[0], val);
            if (v.kind == Value::Kind::Inr) return value_checks(v.payload(), e.args[1], val);
            return false;
        case Obj::Kind::Stack:
            if (v.kind != Value::Kind::List) return false;
            for (const auto& x : v.items) {
                if (!value_checks(x, e.args[0], val)) return false;
            }
            return true;
        default:
            return false;
    }
}

}  // namespace

bool value_checks(const Value& v, const Obj& e0, const Valuation& val) {
    Obj e = normalize_obj(e0);
    if (e.kind == Obj::Kind::Unit) return v.kind == Value::Kind::Unit;
    if (e.kind == Obj::Kind::Tensor) {
        if (v.kind != Value::Kind::Tuple || v.items.size() != e.args.size()) return false;
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (!atomic_checks(v.items[i], e.args[i], val)) return false;
        }
        return true;
    }
    return atomic_checks(v, e, val);
}

void require_value(const Value& v, const Obj& e, const Valuation& val, const std::string& where) {
    if (!value_checks(v, e, val)) {
        throw Error(ErrorKind::IllTypedValue, where + ": " + print_value(v) + " is not a value of " + print_obj(e));
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Value eval_mor(const Mor& m, const Value& v, const Valuation& val) {
    using K = Mor::Kind;
    const auto& o = m.objs;
    switch (m.kind) {
        case K::Gen: {
            auto it = val.mor_maps.find(m.name);
            if (it == val.mor_maps.end()) throw Error(ErrorKind::UnknownName, "morphism '" + m.name + "'");
            auto jt = it->second.find(v);
            if (jt == it->second.end()) {
                throw Error(ErrorKind::IllTypedValue, m.name + " undefined at " + print_value(v));
            }
            return jt->second;
        }
        case K::Id:
            return v;
        case K::Compose:
            return eval_mor(m.subs[1], eval_mor(m.subs[0], v, val), val);
        case K::Tensor: {
            auto ft = infer_mor_type(m.subs[0], val.sig);
            auto [a, b] = split_value(v, arity(ft.dom));
            return join_values(eval_mor(m.subs[0], a, val), eval_mor(m.subs[1], b, val));
        }
        case K::Braid: {
            auto [a, b] = split_value(v, arity(o[0]));
            return join_values(b, a);
        }
        case K::Inj0:
            return Value::inl(v);
        case K::Inj1:
            return Value::inr(v);
        case K::Copair:
            if (v.kind == Value::Kind::Inl) return eval_mor(m.subs[0], v.payload(), val);
            if (v.kind == Value::Kind::Inr) return eval_mor(m.subs[1], v.payload(), val);
            throw Error(ErrorKind::IllTypedValue, "copair applied to " + print_value(v));
        case K::DistR: {
            auto [s, c] = split_value(v, 1);
            if (s.kind == Value::Kind::Inl) return Value::inl(join_values(s.payload(), c));
            if (s.kind == Value::Kind::Inr) return Value::inr(join_values(s.payload(), c));
            throw Error(ErrorKind::IllTypedValue, "distr applied to " + print_value(v));
        }
        case K::UndistR: {
            if (v.kind == Value::Kind::Inl) {
                auto [a, c] = split_value(v.payload(), arity(o[0]));
                return join_values(Value::inl(a), c);
            }
            if (v.kind == Value::Kind::Inr) {
                auto [b, c] = split_value(v.payload(), arity(o[1]));
                return join_values(Value::inr(b), c);
            }
            throw Error(ErrorKind::IllTypedValue, "undistr applied to " + print_value(v));
        }
        case K::DistL: {
            auto [a, s] = split_value(v, arity(o[0]));
            if (s.kind == Value::Kind::Inl) return Value::inl(join_values(a, s.payload()));
            if (s.kind == Value::Kind::Inr) return Value::inr(join_values(a, s.payload()));
            throw Error(ErrorKind::IllTypedValue, "distl applied to " + print_value(v));
        }
        case K::UndistL: {
            if (v.kind == Value::Kind::Inl) {
                auto [a, b] = split_value(v.payload(), arity(o[0]));
                return join_values(a, Value::inl(b));
            }
            if (v.kind == Value::Kind::Inr) {
                auto [a, c] = split_value(v.payload(), arity(o[0]));
                return join_values(a, Value::inr(c));
            }
            throw Error(ErrorKind::IllTypedValue, "undistl applied to " + print_value(v));
        }
        case K::Nil:
            return Value::list({});
        case K::Push: {
            auto [a, s] = split_value(v, arity(o[0]));
            if (s.kind != Value::Kind::List) throw Error(ErrorKind::IllTypedValue, "push applied to " + print_value(v));
            std::vector<Value> xs;
            xs.reserve(s.items.size() + 1);
            xs.push_back(a);
            xs.insert(xs.end(), s.items.begin(), s.items.end());
            return Value::list(std::move(xs));
        }
        case K::Pop: {
            if (v.kind != Value::Kind::List) throw Error(ErrorKind::IllTypedValue, "pop applied to " + print_value(v));
            if (v.items.empty()) return Value::inl(Value::unit());
            std::vector<Value> rest(v.items.begin() + 1, v.items.end());
            return Value::inr(join_values(v.items.front(), Value::list(std::move(rest))));
        }
        case K::Const:
            return m.value;
    }
    throw Error(ErrorKind::Internal, "unhandled morphism kind");
}

// ---------------------------------------------------------------------------
// Enumeration and sampling
// ---------------------------------------------------------------------------

bool is_enumerable(const Obj& e, const Valuation& val) {
    switch (e.kind) {
        case Obj::Kind::Unit:
            return true;
        case Obj::Kind::Gen: {
            auto it = val.carriers.find(e.name);
            return it != val.carriers.end() && it->second.finite;
        }
        case Obj::Kind::Stack:
            return false;
        default:
            for (const auto& a : e.args) {
                if (!is_enumerable(a, val)) return false;
            }
            return true;
    }
}

std::vector<Value> enumerate_values(const Obj& e0, const Valuation& val) {
    Obj e = normalize_obj(e0);
    if (!is_enumerable(e, val)) throw Error(ErrorKind::NotEnumerable, print_obj(e));
    switch (e.kind) {
        case Obj::Kind::Unit:
            return {Value::unit()};
        case Obj::Kind::Gen: {
            std::vector<Value> out;
            for (const auto& a : val.carriers.at(e.name).atoms) out.push_back(Value::atom_of(a));
            return out;
        }
        case Obj::Kind::Sum: {
            std::vector<Value> out;
            for (auto& v : enumerate_values(e.args[0], val)) out.push_back(Value::inl(std::move(v)));
            for (auto& v : enumerate_values(e.args[1], val)) out.push_back(Value::inr(std::move(v)));
            return out;
        }
        case Obj::Kind::Tensor: {
            std::vector<std::vector<Value>> acc{{}};
            for (const auto& f : e.args) {
                auto vs = enumerate_values(f, val);
                std::vector<std::vector<Value>> next;
                next.reserve(acc.size() * vs.size());
                for (const auto& prefix : acc) {
                    for (const auto& v : vs) {
                        auto p = prefix;
                        p.push_back(v);
                        next.push_back(std::move(p));
                    }
                }
                acc = std::move(next);
            }
            std::vector<Value> out;
            out.reserve(acc.size());
            for (auto& xs : acc) out.push_back(Value::tuple(std::move(xs)));
            return out;
        }
        case Obj::Kind::Stack:
            break;
    }
    throw Error(ErrorKind::NotEnumerable, print_obj(e));
}

std::optional<std::size_t> carrier_size(const Obj& e, const Valuation& val) {
    if (!is_enumerable(e, val)) return std::nullopt;
    switch (e.kind) {
        case Obj::Kind::Unit:
            return 1;
        case Obj::Kind::Gen:
            return val.carriers.at(e.name).atoms.size();
        case Obj::Kind::Sum:
            return *carrier_size(e.args[0], val) + *carrier_size(e.args[1], val);
        case Obj::Kind::Tensor: {
            std::size_t n = 1;
            for (const auto& a : e.args) n *= *carrier_size(a, val);
            return n;
        }
        default:
            return std::nullopt;
    }
}

Value sample_value(const Obj& e, const Valuation& val, Rng& rng, std::size_t max_len) {
    switch (e.kind) {
        case Obj::Kind::Unit:
            return Value::unit();
        case Obj::Kind::Gen: {
            const Carrier& c = val.carriers.at(e.name);
            if (c.finite) return Value::atom_of(c.atoms[rng() % c.atoms.size()]);
            std::size_t n = rng() % (max_len + 1);
            std::vector<Value> xs;
            for (std::size_t i = 0; i < n; ++i) xs.push_back(sample_value(c.element, val, rng, max_len));
            return Value::list(std::move(xs));
        }
        case Obj::Kind::Sum:
            if (rng() % 2 == 0) return Value::inl(sample_value(e.args[0], val, rng, max_len));
            return Value::inr(sample_value(e.args[1], val, rng, max_len));
        case Obj::Kind::Stack: {
            std::size_t n = rng() % (max_len + 1);
            std::vector<Value> xs;
            for (std::size_t i = 0; i < n; ++i) xs.push_back(sample_value(e.args[0], val, rng, max_len));
            return Value::list(std::move(xs));
        }
        case Obj::Kind::Tensor: {
            std::vector<Value> xs;
            for (const auto& a : e.args) xs.push_back(sample_value(a, val, rng, max_len));
            return Value::tuple(std::move(xs));
        }
    }
    return Value::unit();
}

}  // namespace fcn
