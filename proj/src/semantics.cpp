#include "fcn/semantics.hpp"

#include <sstream>

#include "fcn/syntax.hpp"

namespace fcn {

// ---------------------------------------------------------------------------
// PNode helpers
// ---------------------------------------------------------------------------

Lazy::Lazy(PV ready) : value_(std::move(ready)) {
    std::call_once(once_, [] {});
}

const PV& Lazy::get() const {
    std::call_once(once_, [this] {
        value_ = thunk_();
        thunk_ = nullptr;
    });
    return value_;
}

PV pv_leaf(std::string label) {
    auto n = std::make_shared<PNode>();
    n->kind = PNode::Kind::Leaf;
    n->label = std::move(label);
    return n;
}

PV pv_send(Value v, PV next) {
    auto n = std::make_shared<PNode>();
    n->kind = PNode::Kind::Send;
    n->value = std::move(v);
    n->next = std::move(next);
    return n;
}

PV pv_table(std::vector<std::pair<Value, PV>> entries) {
    auto n = std::make_shared<PNode>();
    n->kind = PNode::Kind::Table;
    n->table = std::move(entries);
    return n;
}

PV pv_pair(PV a, PV b) {
    auto n = std::make_shared<PNode>();
    n->kind = PNode::Kind::Pair;
    n->first = std::make_shared<Lazy>(std::move(a));
    n->second = std::make_shared<Lazy>(std::move(b));
    return n;
}

PV pv_lazy_pair(std::function<PV()> a, std::function<PV()> b) {
    auto n = std::make_shared<PNode>();
    n->kind = PNode::Kind::Pair;
    n->first = std::make_shared<Lazy>(std::move(a));
    n->second = std::make_shared<Lazy>(std::move(b));
    return n;
}

PV pv_left(PV p) {
    auto n = std::make_shared<PNode>();
    n->kind = PNode::Kind::Left;
    n->next = std::move(p);
    return n;
}

PV pv_right(PV p) {
    auto n = std::make_shared<PNode>();
    n->kind = PNode::Kind::Right;
    n->next = std::move(p);
    return n;
}

PV attach(const PV& x, const Value& b) {
    auto fs = value_factors(b);
    if (fs.empty()) return x;
    auto n = std::make_shared<PNode>();
    n->kind = PNode::Kind::Leaf;
    if (x->kind == PNode::Kind::Leaf) {
        n->label = x->label;
        n->inner = x->inner;
        n->ref = x->ref;
        n->factors = x->factors;
    } else {
        n->inner = x;
    }
    n->factors.insert(n->factors.end(), fs.begin(), fs.end());
    return n;
}

std::pair<PV, Value> split_payload(const PV& p, std::size_t n) {
    if (n == 0) return {p, Value::unit()};
    if (p->kind != PNode::Kind::Leaf || p->factors.size() < n) {
        throw Error(ErrorKind::Internal, "payload carries fewer than " + std::to_string(n) + " factors");
    }
    std::vector<Value> tail(p->factors.end() - static_cast<long>(n), p->factors.end());
    Value b = Value::tuple(std::move(tail));
    if (p->factors.size() == n && p->inner) return {p->inner, b};
    auto rest = std::make_shared<PNode>(*p);
    rest->factors.resize(p->factors.size() - n);
    return {rest, b};
}

// ---------------------------------------------------------------------------
// Protocol-guided traversal
// ---------------------------------------------------------------------------

namespace {

// Persistent protocol stack so lazy continuations can share tails.
struct PL {
    Proto head;
    std::shared_ptr<const PL> tail;
};
using PLPtr = std::shared_ptr<const PL>;

PLPtr cons(const Proto& p, PLPtr tail) { return std::make_shared<const PL>(PL{p, std::move(tail)}); }

PLPtr prepend(const std::vector<Proto>& items, PLPtr tail) {
    for (auto it = items.rbegin(); it != items.rend(); ++it) tail = cons(*it, tail);
    return tail;
}

PLPtr from_stack(const ProtoStack& ps) { return prepend(ps, nullptr); }

[[noreturn]] void shape_error(const char* expected, const PV& p) {
    static const char* names[] = {"leaf", "send", "table", "pair", "left", "right"};
    throw Error(ErrorKind::Internal, std::string("pval shape mismatch: expected ") + expected + ", found " +
                                         names[static_cast<int>(p->kind)]);
}

void expect(const PV& p, PNode::Kind k, const char* what) {
    if (!p || p->kind != k) shape_error(what, p);
}

using LeafFn = std::shared_ptr<const std::function<PV(const PV&)>>;

PV walk(const PV& p, const PLPtr& ps, const LeafFn& fn) {
    if (!ps) return (*fn)(p);
    const Proto& h = ps->head;
    const PLPtr& t = ps->tail;
    switch (h.kind) {
        case Proto::Kind::Done:
            return walk(p, t, fn);
        case Proto::Kind::Seq:
            return walk(p, prepend(h.parts, t), fn);
        case Proto::Kind::Send:
            expect(p, PNode::Kind::Send, "send");
            return pv_send(p->value, walk(p->next, t, fn));
        case Proto::Kind::Recv: {
            expect(p, PNode::Kind::Table, "table");
            std::vector<std::pair<Value, PV>> out;
            out.reserve(p->table.size());
            for (const auto& [k, v] : p->table) out.emplace_back(k, walk(v, t, fn));
            return pv_table(std::move(out));
        }
        case Proto::Kind::Choose:
        case Proto::Kind::StarX: {
            expect(p, PNode::Kind::Pair, "pair");
            PLPtr l, r;
            if (h.kind == Proto::Kind::Choose) {
                l = cons(h.parts[0], t);
                r = cons(h.parts[1], t);
            } else {
                l = t;
                r = cons(h.parts[0], cons(h, t));
            }
            return pv_lazy_pair([p, l, fn] { return walk(p->first->get(), l, fn); },
                                [p, r, fn] { return walk(p->second->get(), r, fn); });
        }
        case Proto::Kind::Offer:
        case Proto::Kind::StarP: {
            PLPtr l, r;
            if (h.kind == Proto::Kind::Offer) {
                l = cons(h.parts[0], t);
                r = cons(h.parts[1], t);
            } else {
                l = t;
                r = cons(h.parts[0], cons(h, t));
            }
            if (p->kind == PNode::Kind::Left) return pv_left(walk(p->next, l, fn));
            if (p->kind == PNode::Kind::Right) return pv_right(walk(p->next, r, fn));
            shape_error("tag", p);
        }
    }
    throw Error(ErrorKind::Internal, "unhandled protocol kind");
}

}  // namespace

PV map_leaves(const PV& p, const ProtoStack& ps, const std::function<PV(const PV&)>& fn) {
    return walk(p, from_stack(ps), std::make_shared<const std::function<PV(const PV&)>>(fn));
}

PV map_leaves(const PV& p, const Proto& u, const std::function<PV(const PV&)>& fn) {
    return map_leaves(p, ProtoStack{u}, fn);
}

// ---------------------------------------------------------------------------
// Observational equality
// ---------------------------------------------------------------------------

namespace {

bool raw_equal(const PV& p, const PV& q, std::size_t budget);

bool leaf_equal(const PV& p, const PV& q, std::size_t budget) {
    if (p->kind != PNode::Kind::Leaf || q->kind != PNode::Kind::Leaf) return raw_equal(p, q, budget);
    if (p->label != q->label || p->ref != q->ref || p->factors != q->factors) return false;
    if (!p->inner || !q->inner) return !p->inner && !q->inner;
    return raw_equal(p->inner, q->inner, budget);
}

// Shape-free comparison used only for payloads that are themselves pvals.
bool raw_equal(const PV& p, const PV& q, std::size_t budget) {
    if (p == q) return true;
    if (p->kind != q->kind) return false;
    switch (p->kind) {
        case PNode::Kind::Leaf:
            return leaf_equal(p, q, budget);
        case PNode::Kind::Send:
            return p->value == q->value && raw_equal(p->next, q->next, budget);
        case PNode::Kind::Left:
        case PNode::Kind::Right:
            return raw_equal(p->next, q->next, budget);
        case PNode::Kind::Table:
            if (p->table.size() != q->table.size()) return false;
            for (std::size_t i = 0; i < p->table.size(); ++i) {
                if (!(p->table[i].first == q->table[i].first)) return false;
                if (!raw_equal(p->table[i].second, q->table[i].second, budget)) return false;
            }
            return true;
        case PNode::Kind::Pair:
            if (budget == 0) return true;
            return raw_equal(p->first->get(), q->first->get(), budget - 1) &&
                   raw_equal(p->second->get(), q->second->get(), budget - 1);
    }
    return false;
}

bool eq(const PV& p, const PV& q, const PLPtr& ps, std::size_t depth) {
    if (p == q) return true;
    if (!ps) return leaf_equal(p, q, depth);
    const Proto& h = ps->head;
    const PLPtr& t = ps->tail;
    switch (h.kind) {
        case Proto::Kind::Done:
            return eq(p, q, t, depth);
        case Proto::Kind::Seq:
            return eq(p, q, prepend(h.parts, t), depth);
        case Proto::Kind::Send:
            expect(p, PNode::Kind::Send, "send");
            expect(q, PNode::Kind::Send, "send");
            return p->value == q->value && eq(p->next, q->next, t, depth);
        case Proto::Kind::Recv:
            expect(p, PNode::Kind::Table, "table");
            expect(q, PNode::Kind::Table, "table");
            if (p->table.size() != q->table.size()) return false;
            for (std::size_t i = 0; i < p->table.size(); ++i) {
                if (!(p->table[i].first == q->table[i].first)) return false;
                if (!eq(p->table[i].second, q->table[i].second, t, depth)) return false;
            }
            return true;
        case Proto::Kind::Choose:
            expect(p, PNode::Kind::Pair, "pair");
            expect(q, PNode::Kind::Pair, "pair");
            return eq(p->first->get(), q->first->get(), cons(h.parts[0], t), depth) &&
                   eq(p->second->get(), q->second->get(), cons(h.parts[1], t), depth);
        case Proto::Kind::StarX:
            if (depth == 0) return true;
            expect(p, PNode::Kind::Pair, "pair");
            expect(q, PNode::Kind::Pair, "pair");
            return eq(p->first->get(), q->first->get(), t, depth - 1) &&
                   eq(p->second->get(), q->second->get(), cons(h.parts[0], cons(h, t)), depth - 1);
        case Proto::Kind::Offer:
        case Proto::Kind::StarP: {
            if (p->kind != q->kind) return false;
            if (p->kind != PNode::Kind::Left && p->kind != PNode::Kind::Right) shape_error("tag", p);
            bool left = p->kind == PNode::Kind::Left;
            PLPtr next;
            if (h.kind == Proto::Kind::Offer) {
                next = cons(h.parts[left ? 0 : 1], t);
            } else {
                next = left ? t : cons(h.parts[0], cons(h, t));
            }
            return eq(p->next, q->next, next, depth);
        }
    }
    return false;
}

}  // namespace

bool pval_equal(const PV& p, const PV& q, const Proto& shape, std::size_t depth) {
    return eq(p, q, cons(shape, nullptr), depth);
}

// ---------------------------------------------------------------------------
// Denotation
// ---------------------------------------------------------------------------

namespace {

struct IterXImpl {
    Denotation alpha, f, g;
    Proto u;  // right boundary of alpha
    std::size_t top_arity;

    static PV run(const std::shared_ptr<const IterXImpl>& self, const PV& w, const Value& a) {
        return pv_lazy_pair([self, w, a] { return self->f(w, a); },
                            [self, w, a] {
                                PV gv = self->g(w, Value::unit());
                                PV layer = self->alpha(gv, a);
                                return map_leaves(layer, self->u, [self](const PV& leaf) {
                                    auto [w2, a2] = split_payload(leaf, self->top_arity);
                                    return run(self, w2, a2);
                                });
                            });
    }
};

struct IterPImpl {
    Denotation alpha, f, g;
    Proto v;  // right boundary of alpha
    std::size_t top_arity;

    static PV run(const std::shared_ptr<const IterPImpl>& self, const PV& t, const Value& a) {
        if (t->kind == PNode::Kind::Left) return self->f(t->next, a);
        if (t->kind != PNode::Kind::Right) shape_error("tag", t);
        PV layer = self->alpha(t->next, a);
        PV folded = map_leaves(layer, self->v, [self](const PV& leaf) {
            auto [t2, a2] = split_payload(leaf, self->top_arity);
            return run(self, t2, a2);
        });
        return self->g(folded, Value::unit());
    }
};

void require_finite_recv(const Obj& a, const Valuation& val) {
    if (!is_enumerable(a, val)) throw Error(ErrorKind::InfiniteRecvCarrier, print_obj(a));
}

Denotation denote_rec(const Cell& c, const Valuation& val) {
    using K = Cell::Kind;
    const auto& n = c.node();
    const Valuation* vp = &val;
    switch (n.kind) {
        case K::Promote: {
            Mor f = n.mor;
            infer_mor_type(f, val.sig);
            return [f, vp](const PV& p, const Value& a) { return attach(p, eval_mor(f, a, *vp)); };
        }
        case K::GetL:
            return [](const PV& p, const Value&) {
                expect(p, PNode::Kind::Send, "send");
                return attach(p->next, p->value);
            };
        case K::PutR:
            return [](const PV& p, const Value& a) { return pv_send(a, p); };
        case K::GetR: {
            require_finite_recv(n.obj, val);
            auto values = enumerate_values(n.obj, val);
            return [values](const PV& p, const Value&) {
                std::vector<std::pair<Value, PV>> t;
                t.reserve(values.size());
                for (const auto& v : values) t.emplace_back(v, attach(p, v));
                return pv_table(std::move(t));
            };
        }
        case K::PutL:
            require_finite_recv(n.obj, val);
            return [](const PV& p, const Value& a) -> PV {
                expect(p, PNode::Kind::Table, "table");
                for (const auto& [k, v] : p->table) {
                    if (k == a) return v;
                }
                throw Error(ErrorKind::IllTypedValue, "table has no entry for " + print_value(a));
            };
        case K::IdV:
            return [](const PV& p, const Value& a) { return attach(p, a); };
        case K::IdH:
            return [](const PV& p, const Value&) { return p; };
        case K::HComp: {
            auto da = denote_rec(c.kid(0), val);
            auto db = denote_rec(c.kid(1), val);
            std::size_t n1 = arity(infer_boundary(c.kid(0), val.sig).top);
            return [da, db, n1](const PV& p, const Value& a) {
                auto [a1, a2] = split_value(a, n1);
                return db(da(p, a1), a2);
            };
        }
        case K::VComp: {
            auto da = denote_rec(c.kid(0), val);
            auto db = denote_rec(c.kid(1), val);
            auto ba = infer_boundary(c.kid(0), val.sig);
            std::size_t nc = arity(ba.bottom);
            Proto w = ba.right;
            return [da, db, nc, w](const PV& p, const Value& a) {
                PV out = da(p, a);
                return map_leaves(out, w, [db, nc](const PV& leaf) {
                    auto [u, cval] = split_payload(leaf, nc);
                    return db(u, cval);
                });
            };
        }
        case K::Pi0:
            return [](const PV& p, const Value&) {
                expect(p, PNode::Kind::Pair, "pair");
                return p->first->get();
            };
        case K::Pi1:
            return [](const PV& p, const Value&) {
                expect(p, PNode::Kind::Pair, "pair");
                return p->second->get();
            };
        case K::Times: {
            auto da = denote_rec(c.kid(0), val);
            auto db = denote_rec(c.kid(1), val);
            return [da, db](const PV& p, const Value& a) {
                return pv_lazy_pair([da, p, a] { return da(p, a); }, [db, p, a] { return db(p, a); });
            };
        }
        case K::Inj0:
            return [](const PV& p, const Value&) { return pv_left(p); };
        case K::Inj1:
            return [](const PV& p, const Value&) { return pv_right(p); };
        case K::Plus: {
            auto da = denote_rec(c.kid(0), val);
            auto db = denote_rec(c.kid(1), val);
            return [da, db](const PV& p, const Value& a) -> PV {
                if (p->kind == PNode::Kind::Left) return da(p->next, a);
                if (p->kind == PNode::Kind::Right) return db(p->next, a);
                shape_error("tag", p);
            };
        }
        case K::CopairC: {
            auto da = denote_rec(c.kid(0), val);
            auto db = denote_rec(c.kid(1), val);
            return [da, db](const PV& p, const Value& a) -> PV {
                if (a.kind == Value::Kind::Inl) return da(p, a.payload());
                if (a.kind == Value::Kind::Inr) return db(p, a.payload());
                throw Error(ErrorKind::IllTypedValue, "copair input " + print_value(a) + " is not tagged");
            };
        }
        case K::IterX: {
            auto impl = std::make_shared<IterXImpl>();
            impl->alpha = denote_rec(c.kid(0), val);
            impl->f = denote_rec(c.kid(1), val);
            impl->g = denote_rec(c.kid(2), val);
            auto ba = infer_boundary(c.kid(0), val.sig);
            impl->u = ba.right;
            impl->top_arity = arity(ba.top);
            std::shared_ptr<const IterXImpl> self = impl;
            return [self](const PV& p, const Value& a) { return IterXImpl::run(self, p, a); };
        }
        case K::IterP: {
            auto impl = std::make_shared<IterPImpl>();
            impl->alpha = denote_rec(c.kid(0), val);
            impl->f = denote_rec(c.kid(1), val);
            impl->g = denote_rec(c.kid(2), val);
            auto ba = infer_boundary(c.kid(0), val.sig);
            impl->v = ba.right;
            impl->top_arity = arity(ba.top);
            std::shared_ptr<const IterPImpl> self = impl;
            return [self](const PV& p, const Value& a) { return IterPImpl::run(self, p, a); };
        }
    }
    throw Error(ErrorKind::Internal, "unhandled cell kind");
}

}  // namespace

Denotation denote(const Cell& c, const Valuation& val) {
    infer_boundary(c, val.sig);
    return denote_rec(c, val);
}

// ---------------------------------------------------------------------------
// Input generation
// ---------------------------------------------------------------------------

std::vector<PV> default_payloads() { return {pv_leaf("x0"), pv_leaf("x1")}; }

bool pvals_enumerable(const Proto& u, const Valuation& val) {
    switch (u.kind) {
        case Proto::Kind::StarX:
        case Proto::Kind::StarP:
            return false;
        case Proto::Kind::Send:
        case Proto::Kind::Recv:
            return is_enumerable(u.obj, val);
        default:
            for (const auto& x : u.parts) {
                if (!pvals_enumerable(x, val)) return false;
            }
            return true;
    }
}

namespace {

std::size_t sat_mul(std::size_t a, std::size_t b, std::size_t cap) {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap + 1;
    return std::min(a * b, cap + 1);
}

std::size_t sat_pow(std::size_t a, std::size_t e, std::size_t cap) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, a, cap);
    return r;
}

std::size_t count_rec(const Proto& u, std::size_t leaves, const Valuation& val, std::size_t cap) {
    switch (u.kind) {
        case Proto::Kind::Done:
            return leaves;
        case Proto::Kind::Send:
            return sat_mul(*carrier_size(u.obj, val), leaves, cap);
        case Proto::Kind::Recv:
            return sat_pow(leaves, *carrier_size(u.obj, val), cap);
        case Proto::Kind::Seq: {
            std::size_t n = leaves;
            for (auto it = u.parts.rbegin(); it != u.parts.rend(); ++it) n = count_rec(*it, n, val, cap);
            return n;
        }
        case Proto::Kind::Choose:
            return sat_mul(count_rec(u.parts[0], leaves, val, cap), count_rec(u.parts[1], leaves, val, cap), cap);
        case Proto::Kind::Offer:
            return std::min(count_rec(u.parts[0], leaves, val, cap) + count_rec(u.parts[1], leaves, val, cap),
                            cap + 1);
        default:
            return cap + 1;
    }
}

std::vector<PV> enum_rec(const Proto& u, const std::vector<PV>& leaves, const Valuation& val) {
    switch (u.kind) {
        case Proto::Kind::Done:
            return leaves;
        case Proto::Kind::Send: {
            std::vector<PV> out;
            for (const auto& v : enumerate_values(u.obj, val)) {
                for (const auto& l : leaves) out.push_back(pv_send(v, l));
            }
            return out;
        }
        case Proto::Kind::Recv: {
            auto keys = enumerate_values(u.obj, val);
            std::vector<std::vector<std::pair<Value, PV>>> acc{{}};
            for (const auto& k : keys) {
                std::vector<std::vector<std::pair<Value, PV>>> next;
                for (const auto& prefix : acc) {
                    for (const auto& l : leaves) {
                        auto e = prefix;
                        e.emplace_back(k, l);
                        next.push_back(std::move(e));
                    }
                }
                acc = std::move(next);
            }
            std::vector<PV> out;
            for (auto& e : acc) out.push_back(pv_table(std::move(e)));
            return out;
        }
        case Proto::Kind::Seq: {
            std::vector<PV> cur = leaves;
            for (auto it = u.parts.rbegin(); it != u.parts.rend(); ++it) cur = enum_rec(*it, cur, val);
            return cur;
        }
        case Proto::Kind::Choose: {
            auto xs = enum_rec(u.parts[0], leaves, val);
            auto ys = enum_rec(u.parts[1], leaves, val);
            std::vector<PV> out;
            for (const auto& x : xs) {
                for (const auto& y : ys) out.push_back(pv_pair(x, y));
            }
            return out;
        }
        case Proto::Kind::Offer: {
            std::vector<PV> out;
            for (auto& x : enum_rec(u.parts[0], leaves, val)) out.push_back(pv_left(x));
            for (auto& y : enum_rec(u.parts[1], leaves, val)) out.push_back(pv_right(y));
            return out;
        }
        default:
            throw Error(ErrorKind::NotEnumerable, print_proto(u));
    }
}

}  // namespace

std::size_t count_pvals(const Proto& u, std::size_t payloads, const Valuation& val, std::size_t cap) {
    if (!pvals_enumerable(u, val)) return cap + 1;
    return count_rec(normalize(u), payloads, val, cap);
}

std::vector<PV> enumerate_pvals(const Proto& u, const std::vector<PV>& payloads, const Valuation& val) {
    if (!pvals_enumerable(u, val)) throw Error(ErrorKind::NotEnumerable, print_proto(u));
    return enum_rec(normalize(u), payloads, val);
}

namespace {

struct Sampler {
    const Valuation& val;
    Rng& rng;
    std::size_t depth;

    // Leaves receive the height still available on their path, so nested
    // StarP trees share one budget.
    using LeafGen = std::function<PV(std::size_t)>;

    PV sample(const Proto& u, std::size_t h, const LeafGen& leaf) {
        switch (u.kind) {
            case Proto::Kind::Done:
                return leaf(h);
            case Proto::Kind::Send: {
                Value v = sample_value(u.obj, val, rng);
                return pv_send(std::move(v), leaf(h));
            }
            case Proto::Kind::Recv: {
                require_finite_recv(u.obj, val);
                std::vector<std::pair<Value, PV>> t;
                for (const auto& k : enumerate_values(u.obj, val)) t.emplace_back(k, leaf(h));
                return pv_table(std::move(t));
            }
            case Proto::Kind::Seq:
                return sample_seq(u.parts, 0, h, leaf);
            case Proto::Kind::Choose: {
                PV a = sample(u.parts[0], h, leaf);
                PV b = sample(u.parts[1], h, leaf);
                return pv_pair(std::move(a), std::move(b));
            }
            case Proto::Kind::Offer:
                if (rng() % 2 == 0) return pv_left(sample(u.parts[0], h, leaf));
                return pv_right(sample(u.parts[1], h, leaf));
            case Proto::Kind::StarP:
                return tree(u.parts[0], h, leaf);
            case Proto::Kind::StarX:
                return handle_gen(u.parts[0], h, leaf);
        }
        throw Error(ErrorKind::Internal, "unhandled protocol kind");
    }

    PV sample_seq(const std::vector<Proto>& items, std::size_t i, std::size_t h, const LeafGen& leaf) {
        if (i == items.size()) return leaf(h);
        return sample(items[i], h, [&](std::size_t h2) { return sample_seq(items, i + 1, h2, leaf); });
    }

    PV tree(const Proto& u, std::size_t h, const LeafGen& leaf) {
        if (h == 0 || rng() % 3 == 0) return pv_left(leaf(h));
        return pv_right(sample(u, h - 1, [&](std::size_t h2) { return tree(u, h2, leaf); }));
    }

    struct XGen {
        Proto u;
        std::vector<PV> stops;
        std::vector<PV> layers;
    };

    static PV handle(const std::shared_ptr<const XGen>& gen, long i) {
        return pv_lazy_pair([gen, i] { return gen->stops[static_cast<std::size_t>(i)]; },
                            [gen, i] {
                                return map_leaves(gen->layers[static_cast<std::size_t>(i)], gen->u,
                                                  [gen](const PV& leaf) { return handle(gen, leaf->ref); });
                            });
    }

    // An eventually periodic stream: k states, each with a stop part and a
    // U-layer whose leaves name the successor state.
    PV handle_gen(const Proto& u, std::size_t h, const LeafGen& leaf) {
        std::size_t k = 1 + rng() % std::max<std::size_t>(depth, 1);
        auto gen = std::make_shared<XGen>();
        gen->u = u;
        for (std::size_t i = 0; i < k; ++i) {
            gen->stops.push_back(leaf(h));
            gen->layers.push_back(sample(u, h, [&](std::size_t) {
                auto n = std::make_shared<PNode>();
                n->kind = PNode::Kind::Leaf;
                n->ref = static_cast<long>(rng() % k);
                return PV(n);
            }));
        }
        return handle(gen, 0);
    }
};

}  // namespace

std::vector<PV> sample_pvals(const Proto& u, const std::vector<PV>& payloads, const Valuation& val,
                             std::size_t depth, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Sampler s{val, rng, depth};
    Proto nu = normalize(u);
    std::vector<PV> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(s.sample(nu, depth, [&](std::size_t) { return payloads[rng() % payloads.size()]; }));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extensional comparison
// ---------------------------------------------------------------------------

Comparison compare_cells(const Cell& c1, const Cell& c2, const Valuation& val, const Config& cfg) {
    Boundary b1 = infer_boundary(c1, val.sig);
    Boundary b2 = infer_boundary(c2, val.sig);
    if (!boundary_equal(b1, b2)) {
        throw Error(ErrorKind::BoundaryMismatch, "cells compared with different boundaries: " +
                                                     print_boundary(b1) + " vs " + print_boundary(b2));
    }
    Denotation d1 = denote(c1, val);
    Denotation d2 = denote(c2, val);
    auto payloads = default_payloads();

    Comparison res;
    auto check = [&](const PV& p, const Value& a) {
        ++res.inputs;
        PV o1 = d1(p, a);
        PV o2 = d2(p, a);
        if (pval_equal(o1, o2, b1.right, cfg.depth)) return true;
        std::ostringstream os;
        os << "input " << print_pval(p, b1.left, cfg.depth) << " with " << print_value(a) << ": "
           << print_pval(o1, b1.right, cfg.depth) << " vs " << print_pval(o2, b1.right, cfg.depth);
        res.counterexample = os.str();
        res.verdict = Verdict::Unequal;
        return false;
    };

    bool enumerable = pvals_enumerable(b1.left, val) && is_enumerable(b1.top, val);
    if (enumerable) {
        std::size_t n = sat_mul(count_pvals(b1.left, payloads.size(), val, kEnumerationCap),
                                *carrier_size(b1.top, val), kEnumerationCap);
        enumerable = n <= kEnumerationCap;
    }
    if (enumerable) {
        res.exhaustive = true;
        auto tops = enumerate_values(b1.top, val);
        for (const auto& p : enumerate_pvals(b1.left, payloads, val)) {
            for (const auto& a : tops) {
                if (!check(p, a)) return res;
            }
        }
        return res;
    }
    if (cfg.samples == 0) {
        res.verdict = Verdict::Skipped;
        return res;
    }
    auto ps = sample_pvals(b1.left, payloads, val, cfg.depth, cfg.samples, cfg.seed);
    Rng rng(cfg.seed ^ 0x9E3779B97F4A7C15ULL);
    for (const auto& p : ps) {
        Value a = sample_value(b1.top, val, rng);
        if (!check(p, a)) return res;
    }
    return res;
}

bool cells_equal(const Cell& c1, const Cell& c2, const Valuation& val, const Config& cfg) {
    return compare_cells(c1, c2, val, cfg).verdict != Verdict::Unequal;
}

}  // namespace fcn
