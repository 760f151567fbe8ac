#include "fcn/laws.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "fcn/derived.hpp"
#include "fcn/generate.hpp"
#include "fcn/syntax.hpp"

namespace fcn {

LawResult::Status LawResult::status() const {
    if (failed > 0) return Status::Fail;
    if (instances > 0 && skipped == instances) return Status::Skipped;
    return Status::Pass;
}

const char* law_group_name(LawGroup g) {
    switch (g) {
        case LawGroup::Signature: return "signature";
        case LawGroup::Protocol: return "protocol";
        case LawGroup::Corner: return "corner";
        case LawGroup::Interchange: return "interchange";
        case LawGroup::Choice: return "choice";
        case LawGroup::Crossing: return "crossing";
        case LawGroup::Iteration: return "iteration";
        case LawGroup::Semantics: return "semantics";
        case LawGroup::Rewrite: return "rewrite";
    }
    return "?";
}

std::vector<LawGroup> all_law_groups() {
    return {LawGroup::Signature, LawGroup::Protocol,  LawGroup::Corner,    LawGroup::Interchange, LawGroup::Choice,
            LawGroup::Crossing,  LawGroup::Iteration, LawGroup::Semantics, LawGroup::Rewrite};
}

Cell mutation_fixture(const Obj& a) {
    Mor swap = Mor::copair(Mor::inj1(a, a), Mor::inj0(a, a));
    Cell t = Cell::times(Cell::id_v(Obj::sum(a, a)), Cell::promote(swap));
    return Cell::hcomp(t, Cell::pi0(Proto::done(), Proto::done()));
}

namespace {

std::uint64_t law_seed(const std::string& id, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : id) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h ^ seed;
}

std::string clip(std::string s) {
    if (s.size() > 1500) s = s.substr(0, 1500) + " ...";
    return s;
}

class Recorder {
public:
    Recorder(std::string id, const Valuation& val, const LawOptions& o)
        : val_(val), o_(o), gen_(val, law_seed(id, o.cfg.seed)) {
        r_.id = std::move(id);
    }

    TermGen& gen() { return gen_; }
    const Signature& sig() const { return val_.sig; }
    Boundary bd(const Cell& c) const { return infer_boundary(c, val_.sig); }

    void equal(const Cell& a, const Cell& b) {
        ++r_.instances;
        Config cfg = o_.cfg;
        cfg.seed = o_.cfg.seed + 0x9E37ULL * r_.instances;
        try {
            Comparison c = compare_cells(a, b, val_, cfg);
            if (c.exhaustive) ++r_.exhaustive;
            if (c.verdict == Verdict::Skipped) ++r_.skipped;
            if (c.verdict == Verdict::Unequal) {
                fail(print_cell(a) + "  vs  " + print_cell(b) + " on " + c.counterexample);
            }
        } catch (const Error& e) {
            fail(std::string(e.what()) + " in " + print_cell(a) + "  vs  " + print_cell(b));
        }
    }

    void holds(bool ok, const std::function<std::string()>& why, bool exhaustive = true) {
        ++r_.instances;
        if (exhaustive) ++r_.exhaustive;
        if (!ok) fail(why());
    }

    void skip() {
        ++r_.instances;
        ++r_.skipped;
    }

    void fail(const std::string& why) {
        ++r_.failed;
        if (r_.counterexample.empty()) r_.counterexample = clip(why);
    }

    // Runs one instance builder, turning generator errors into failures.
    void guard(const std::function<void()>& body) {
        try {
            body();
        } catch (const Error& e) {
            ++r_.instances;
            fail(std::string("while building an instance: ") + e.what());
        }
    }

    LawResult done() { return r_; }

private:
    const Valuation& val_;
    const LawOptions& o_;
    TermGen gen_;
    LawResult r_;
};

using Rows = std::vector<LawResult>;

template <class F>
void law(Rows& out, const std::string& id, const Valuation& val, const LawOptions& o, F body) {
    Recorder rec(id, val, o);
    body(rec);
    out.push_back(rec.done());
}

std::vector<Obj> bases(const Valuation& val) { return TermGen(val, 0).base_objects(); }

std::vector<Mor> mor_pool(const Valuation& val) {
    std::vector<Mor> pool;
    auto objs = bases(val);
    for (const auto& [name, ty] : val.sig.morphisms) {
        if (is_enumerable(ty.dom, val) && is_enumerable(ty.cod, val)) pool.push_back(Mor::gen(name));
    }
    for (const auto& a : objs) {
        pool.push_back(Mor::id(a));
        pool.push_back(Mor::copair(Mor::inj1(a, a), Mor::inj0(a, a)));
        for (const auto& v : enumerate_values(a, val)) pool.push_back(Mor::constant(a, v));
        for (const auto& b : objs) {
            pool.push_back(Mor::braid(a, b));
            pool.push_back(Mor::inj0(a, b));
            pool.push_back(Mor::inj1(a, b));
        }
    }
    return pool;
}

// ---------------------------------------------------------------------------

void signature_laws(Rows& out, const Valuation& val, const LawOptions& o) {
    auto objs = bases(val);
    std::vector<Obj> small = objs;
    small.push_back(Obj::unit());
    for (const auto& a : objs) {
        for (const auto& b : objs) small.push_back(Obj::tensor(a, b));
    }

    law(out, "obj-normalize-idempotent", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.random; ++i) {
            Obj x = r.gen().obj(1);
            Obj y = r.gen().obj(1);
            Obj raw = Obj::raw_tensor({x, Obj::unit(), Obj::raw_tensor({y}), Obj::unit()});
            Obj n = normalize_obj(raw);
            r.holds(normalize_obj(n) == n && arity(n) == arity(x) + arity(y) &&
                        n == Obj::tensor(x, y),
                    [&] { return print_obj(raw) + " normalizes to " + print_obj(n); });
        }
    });

    law(out, "value-split-join", val, o, [&](Recorder& r) {
        for (const auto& x : small) {
            for (const auto& y : small) {
                auto xs = enumerate_values(x, val);
                auto ys = enumerate_values(y, val);
                for (const auto& a : xs) {
                    for (const auto& b : ys) {
                        Value j = join_values(a, b);
                        auto [a2, b2] = split_value(j, arity(x));
                        r.holds(a2 == a && b2 == b && value_checks(j, Obj::tensor(x, y), val),
                                [&] { return print_value(a) + " , " + print_value(b) + " -> " + print_value(j); });
                    }
                }
            }
        }
    });

    law(out, "dist-inverse", val, o, [&](Recorder& r) {
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                for (const auto& c : objs) {
                    std::vector<std::pair<Mor, Mor>> pairs{{Mor::distr(a, b, c), Mor::undistr(a, b, c)},
                                                           {Mor::undistr(a, b, c), Mor::distr(a, b, c)},
                                                           {Mor::distl(a, b, c), Mor::undistl(a, b, c)},
                                                           {Mor::undistl(a, b, c), Mor::distl(a, b, c)}};
                    for (const auto& [f, g] : pairs) {
                        Obj dom = infer_mor_type(f, val.sig).dom;
                        bool ok = true;
                        for (const auto& v : enumerate_values(dom, val)) {
                            ok = ok && eval_mor(g, eval_mor(f, v, val), val) == v;
                        }
                        r.holds(ok, [&] { return print_mor(f) + " ; " + print_mor(g) + " is not the identity"; });
                    }
                }
            }
        }
    });

    law(out, "braid-involutive", val, o, [&](Recorder& r) {
        for (const auto& x : small) {
            for (const auto& y : small) {
                Mor f = Mor::compose(Mor::braid(x, y), Mor::braid(y, x));
                bool ok = true;
                for (const auto& v : enumerate_values(Obj::tensor(x, y), val)) ok = ok && eval_mor(f, v, val) == v;
                r.holds(ok, [&] { return print_mor(f) + " is not the identity"; });
            }
        }
    });

    law(out, "mor-eval-typed", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.random; ++i) {
            r.guard([&] {
                Obj dom = r.gen().obj(1);
                Mor f = r.gen().mor_from(dom, 2);
                MorType t = infer_mor_type(f, val.sig);
                bool ok = t.dom == normalize_obj(dom);
                Value bad;
                for (const auto& v : enumerate_values(t.dom, val)) {
                    Value w = eval_mor(f, v, val);
                    if (!value_checks(w, t.cod, val)) {
                        ok = false;
                        bad = v;
                    }
                }
                r.holds(ok, [&] { return print_mor(f) + " leaves its codomain at " + print_value(bad); });
            });
        }
    });

    law(out, "injections-disjoint", val, o, [&](Recorder& r) {
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                std::set<Value> seen;
                std::size_t n = 0;
                for (const auto& v : enumerate_values(a, val)) {
                    seen.insert(eval_mor(Mor::inj0(a, b), v, val));
                    ++n;
                }
                for (const auto& v : enumerate_values(b, val)) {
                    seen.insert(eval_mor(Mor::inj1(a, b), v, val));
                    ++n;
                }
                r.holds(seen.size() == n && n == *carrier_size(Obj::sum(a, b), val),
                        [&] { return "injections into " + print_obj(Obj::sum(a, b)) + " overlap"; });
            }
        }
    });
}

void protocol_laws(Rows& out, const Valuation& val, const LawOptions& o) {
    law(out, "proto-normalize-idempotent", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.random; ++i) {
            Proto p = r.gen().proto(3);
            Proto raw = Proto::raw_seq({Proto::done(), p, Proto::raw_seq({Proto::done()})});
            Proto n = normalize(raw);
            r.holds(normalize(n) == n && n == normalize(p), [&] { return print_proto(raw); });
        }
    });

    law(out, "proto-equal-equivalence", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.random; ++i) {
            Proto p = r.gen().proto(2);
            Proto q = p.kind == Proto::Kind::StarX   ? unfold_star_x(p)
                      : p.kind == Proto::Kind::StarP ? unfold_star_p(p)
                                                     : Proto::raw_seq({p, Proto::done()});
            Proto w = Proto::raw_seq({Proto::done(), q});
            r.holds(proto_equal(p, p) && proto_equal(p, q) && proto_equal(q, p) && proto_equal(q, w) &&
                        proto_equal(p, w),
                    [&] { return print_proto(p) + " / " + print_proto(q); });
        }
    });

    law(out, "proto-star-unfold", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.small_random; ++i) {
            Proto u = r.gen().proto(2);
            Proto x = Proto::star_x(u);
            Proto p = Proto::star_p(u);
            r.holds(proto_equal(x, Proto::choose(Proto::done(), Proto::seq(u, x))) &&
                        proto_equal(p, Proto::offer(Proto::done(), Proto::seq(u, p))) && !proto_equal(x, p),
                    [&] { return "unfolding of " + print_proto(x); });
        }
    });

    law(out, "proto-seq-monoid", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.small_random; ++i) {
            Proto a = r.gen().proto(1), b = r.gen().proto(1), c = r.gen().proto(1);
            r.holds(proto_equal(Proto::raw_seq({Proto::raw_seq({a, b}), c}),
                                Proto::raw_seq({a, Proto::raw_seq({b, c})})) &&
                        proto_equal(Proto::raw_seq({a, Proto::done()}), a),
                    [&] { return print_proto(a) + " ; " + print_proto(b) + " ; " + print_proto(c); });
        }
    });

    law(out, "proto-kinds-distinct", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.small_random; ++i) {
            Obj a = r.gen().base();
            Proto u = r.gen().proto(1), w = r.gen().proto(1);
            r.holds(!proto_equal(Proto::send(a), Proto::recv(a)) &&
                        !proto_equal(Proto::choose(u, w), Proto::offer(u, w)) &&
                        !proto_equal(Proto::star_x(u), Proto::done()),
                    [&] { return print_proto(u) + ", " + print_proto(w); });
        }
    });
}

void corner_laws(Rows& out, const Valuation& val, const LawOptions& o) {
    auto objs = bases(val);
    auto pool = mor_pool(val);
    auto type = [&](const Mor& m) { return infer_mor_type(m, val.sig); };

    law(out, "yank-h-circle", val, o, [&](Recorder& r) {
        for (const auto& a : objs) r.equal(Cell::hcomp(Cell::put_r(a), Cell::get_l(a)), Cell::id_v(a));
    });
    law(out, "yank-v-circle", val, o, [&](Recorder& r) {
        for (const auto& a : objs) {
            r.equal(Cell::vcomp(Cell::get_l(a), Cell::put_r(a)), Cell::id_h(Proto::send(a)));
        }
    });
    law(out, "yank-h-bullet", val, o, [&](Recorder& r) {
        for (const auto& a : objs) r.equal(Cell::hcomp(Cell::get_r(a), Cell::put_l(a)), Cell::id_v(a));
    });
    law(out, "yank-v-bullet", val, o, [&](Recorder& r) {
        for (const auto& a : objs) {
            r.equal(Cell::vcomp(Cell::get_r(a), Cell::put_l(a)), Cell::id_h(Proto::recv(a)));
        }
    });
    law(out, "corner-id", val, o, [&](Recorder& r) {
        for (const auto& a : objs) r.equal(Cell::promote(Mor::id(a)), Cell::id_v(a));
        r.equal(Cell::promote(Mor::id(Obj::unit())), Cell::id_h(Proto::done()));
    });
    law(out, "corner-compose", val, o, [&](Recorder& r) {
        for (const auto& f : pool) {
            for (const auto& g : pool) {
                if (!(type(f).cod == type(g).dom)) continue;
                r.equal(Cell::vcomp(Cell::promote(f), Cell::promote(g)), Cell::promote(Mor::compose(f, g)));
            }
        }
    });
    law(out, "corner-tensor", val, o, [&](Recorder& r) {
        for (const auto& f : pool) {
            for (const auto& g : pool) {
                if (arity(type(f).dom) > 1 || arity(type(g).dom) > 1) continue;
                r.equal(Cell::hcomp(Cell::promote(f), Cell::promote(g)), Cell::promote(Mor::tensor(f, g)));
            }
        }
    });
}

void interchange_laws(Rows& out, const Valuation& val, const LawOptions& o) {
    law(out, "interchange", val, o, [&](Recorder& r) {
        auto& g = r.gen();
        for (std::size_t i = 0; i < o.random; ++i) {
            r.guard([&] {
                Cell a = g.cell(1);
                Boundary ba = r.bd(a);
                Cell c = g.with_left(ba.right, 1);
                Cell b = g.with_top(ba.bottom, 1);
                Boundary bb = r.bd(b), bc = r.bd(c);
                Cell x = crossing(bb.right, bc.bottom);
                Cell d = g.coin(2) ? Cell::hcomp(x, g.hcell(bb.right, 1))
                                   : Cell::vcomp(x, g.closed_with_top(bc.bottom, 1));
                r.equal(Cell::vcomp(Cell::hcomp(a, c), Cell::hcomp(b, d)),
                        Cell::hcomp(Cell::vcomp(a, b), Cell::vcomp(c, d)));
            });
        }
    });
    auto each = [&](const std::string& id, const std::function<void(Recorder&, const Cell&)>& body) {
        law(out, id, val, o, [&](Recorder& r) {
            for (std::size_t i = 0; i < o.small_random; ++i) {
                r.guard([&] { body(r, r.gen().cell(2)); });
            }
        });
    };
    each("hcomp-unit-left", [](Recorder& r, const Cell& c) { r.equal(Cell::hcomp(Cell::id_h(r.bd(c).left), c), c); });
    each("hcomp-unit-right", [](Recorder& r, const Cell& c) { r.equal(Cell::hcomp(c, Cell::id_h(r.bd(c).right)), c); });
    each("vcomp-unit-top", [](Recorder& r, const Cell& c) { r.equal(Cell::vcomp(Cell::id_v(r.bd(c).top), c), c); });
    each("vcomp-unit-bottom", [](Recorder& r, const Cell& c) { r.equal(Cell::vcomp(c, Cell::id_v(r.bd(c).bottom)), c); });
    each("hcomp-assoc", [](Recorder& r, const Cell& a) {
        Cell b = r.gen().with_left(r.bd(a).right, 1);
        Cell c = r.gen().with_left(r.bd(b).right, 1);
        r.equal(Cell::hcomp(Cell::hcomp(a, b), c), Cell::hcomp(a, Cell::hcomp(b, c)));
    });
    each("vcomp-assoc", [](Recorder& r, const Cell& a) {
        Cell b = r.gen().with_top(r.bd(a).bottom, 1);
        Cell c = r.gen().with_top(r.bd(b).bottom, 1);
        r.equal(Cell::vcomp(Cell::vcomp(a, b), c), Cell::vcomp(a, Cell::vcomp(b, c)));
    });
}

// A morphism b -> a from the pool, or nullopt.
std::optional<Mor> find_mor(const std::vector<Mor>& pool, const Obj& b, const Obj& a, const Signature& sig,
                            TermGen& g) {
    std::vector<Mor> hits;
    for (const auto& m : pool) {
        auto t = infer_mor_type(m, sig);
        if (t.dom == b && t.cod == a) hits.push_back(m);
    }
    if (hits.empty()) return std::nullopt;
    return hits[g.below(hits.size())];
}

void choice_laws(Rows& out, const Valuation& val, const LawOptions& o) {
    auto objs = bases(val);
    auto pool = mor_pool(val);
    std::size_t n = o.small_random;

    law(out, "beta-pi0", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Cell a = r.gen().cell(2, false);
                Cell b = Cell::hcomp(a, r.gen().hcell(r.bd(a).right, 1));
                r.equal(Cell::hcomp(Cell::times(a, b), Cell::pi0(r.bd(a).right, r.bd(b).right)), a);
            });
        }
    });
    law(out, "beta-pi1", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Cell a = r.gen().cell(2, false);
                Cell b = Cell::hcomp(a, r.gen().hcell(r.bd(a).right, 1));
                r.equal(Cell::hcomp(Cell::times(a, b), Cell::pi1(r.bd(a).right, r.bd(b).right)), b);
            });
        }
    });
    auto plus_pair = [](Recorder& r) {
        Cell a = r.gen().cell(2, false);
        Proto l = r.bd(a).left;
        Cell b = Cell::hcomp(Cell::pi0(l, r.gen().finite_proto(1)), a);
        return std::make_pair(a, b);
    };
    law(out, "beta-inj0", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                auto [a, b] = plus_pair(r);
                r.equal(Cell::hcomp(Cell::inj0(r.bd(a).left, r.bd(b).left), Cell::plus(a, b)), a);
            });
        }
    });
    law(out, "beta-inj1", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                auto [a, b] = plus_pair(r);
                r.equal(Cell::hcomp(Cell::inj1(r.bd(a).left, r.bd(b).left), Cell::plus(a, b)), b);
            });
        }
    });
    // a : (U, A, C, W) and b : (U, B, C, W) built from a.
    auto copair_pair = [&](Recorder& r) {
        Obj a = r.gen().base();
        Obj b = r.gen().base();
        auto f = find_mor(pool, b, a, val.sig, r.gen());
        if (!f) {
            b = a;
            f = r.gen().endo(a);
        }
        Cell x = r.gen().with_top(a, 1);
        Boundary bx = r.bd(x);
        if (!iteration_free(bx.left)) x = r.gen().closed_with_top(a, 1);
        return std::make_tuple(a, b, x, Cell::vcomp(Cell::promote(*f), x));
    };
    law(out, "beta-copair0", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                auto [a, b, x, y] = copair_pair(r);
                r.equal(Cell::vcomp(Cell::promote(Mor::inj0(a, b)), Cell::copair(x, y)), x);
            });
        }
    });
    law(out, "beta-copair1", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                auto [a, b, x, y] = copair_pair(r);
                r.equal(Cell::vcomp(Cell::promote(Mor::inj1(a, b)), Cell::copair(x, y)), y);
            });
        }
    });
    law(out, "pairing-eta", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Cell a = r.gen().cell(1, false);
                Proto ra = r.bd(a).right;
                Cell h = Cell::hcomp(a, Cell::times(r.gen().hcell(ra, 1), r.gen().hcell(ra, 1)));
                Proto rh = r.bd(h).right;
                Proto u = normalize(rh).parts[0], w = normalize(rh).parts[1];
                r.equal(h, Cell::times(Cell::hcomp(h, Cell::pi0(u, w)), Cell::hcomp(h, Cell::pi1(u, w))));
            });
        }
    });
    law(out, "copairing-eta", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Proto u = r.gen().finite_proto(1);
                Proto z = r.gen().finite_proto(0);
                Cell x = r.gen().with_left(u, 1);
                if (!iteration_free(r.bd(x).right)) x = Cell::hcomp(crossing(u, r.gen().base()), r.gen().hcell(u, 0));
                Cell h = Cell::plus(x, Cell::hcomp(Cell::pi0(u, z), x));
                Proto w = Proto::choose(u, z);
                r.equal(h, Cell::plus(Cell::hcomp(Cell::inj0(u, w), h), Cell::hcomp(Cell::inj1(u, w), h)));
            });
        }
    });
    law(out, "copair-eta", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Obj a = r.gen().base(), b = r.gen().base();
                Cell c = r.gen().closed_with_top(Obj::sum(a, b), 2);
                r.equal(c, Cell::copair(Cell::vcomp(Cell::promote(Mor::inj0(a, b)), c),
                                        Cell::vcomp(Cell::promote(Mor::inj1(a, b)), c)));
            });
        }
    });
    law(out, "copair-promote", val, o, [&](Recorder& r) {
        for (const auto& f : pool) {
            for (const auto& g : pool) {
                auto tf = infer_mor_type(f, val.sig), tg = infer_mor_type(g, val.sig);
                if (!(tf.cod == tg.cod) || tf.dom.is_unit() || tg.dom.is_unit()) continue;
                r.equal(Cell::copair(Cell::promote(f), Cell::promote(g)), Cell::promote(Mor::copair(f, g)));
            }
        }
    });
    law(out, "absorb-left", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Cell gam = r.gen().cell(1, false);
                Boundary bg = r.bd(gam);
                Obj a = r.gen().base(), b = r.gen().base();
                auto f = find_mor(pool, b, a, val.sig, r.gen());
                if (!f) {
                    b = a;
                    f = Mor::id(a);
                }
                Cell x = Cell::hcomp(crossing(bg.right, a), r.gen().hcell(bg.right, 1));
                Cell y = Cell::vcomp(Cell::promote(*f), x);
                r.equal(Cell::hcomp(gam, Cell::copair(x, y)),
                        Cell::vcomp(Cell::promote(Mor::distl(bg.top, a, b)),
                                    Cell::copair(Cell::hcomp(gam, x), Cell::hcomp(gam, y))));
            });
        }
    });
    law(out, "absorb-right", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                auto [a, b, x, y] = copair_pair(r);
                Cell gam = r.gen().with_left(r.bd(x).right, 1);
                if (!iteration_free(r.bd(gam).right)) gam = Cell::id_h(r.bd(x).right);
                Obj c = r.bd(gam).top;
                r.equal(Cell::hcomp(Cell::copair(x, y), gam),
                        Cell::vcomp(Cell::promote(Mor::distr(a, b, c)),
                                    Cell::copair(Cell::hcomp(x, gam), Cell::hcomp(y, gam))));
            });
        }
    });
    law(out, "absorb-vertical", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                auto [a, b, x, y] = copair_pair(r);
                Cell gam = r.gen().closed_with_top(r.bd(x).bottom, 1);
                r.equal(Cell::vcomp(Cell::copair(x, y), gam), Cell::copair(Cell::vcomp(x, gam), Cell::vcomp(y, gam)));
            });
        }
    });
    law(out, "moral-send-iso", val, o, [&](Recorder& r) {
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                auto [to, from] = moral_iso_send(a, b);
                r.equal(Cell::hcomp(to, from), Cell::id_h(Proto::send(Obj::sum(a, b))));
                r.equal(Cell::hcomp(from, to), Cell::id_h(Proto::offer(Proto::send(a), Proto::send(b))));
            }
        }
    });
    law(out, "moral-recv-iso", val, o, [&](Recorder& r) {
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                auto [to, from] = moral_iso_recv(a, b);
                r.equal(Cell::hcomp(to, from), Cell::id_h(Proto::choose(Proto::recv(a), Proto::recv(b))));
                r.equal(Cell::hcomp(from, to), Cell::id_h(Proto::recv(Obj::sum(a, b))));
            }
        }
    });
}

void crossing_laws(Rows& out, const Valuation& val, const LawOptions& o) {
    std::size_t n = o.small_random;
    law(out, "crossing-unit", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            Proto u = r.gen().proto(2);
            r.equal(crossing(u, Obj::unit()), Cell::id_h(u));
        }
    });
    law(out, "crossing-tensor", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            Proto u = r.gen().proto(2);
            Obj a = r.gen().obj(0), b = r.gen().obj(0);
            r.equal(crossing(u, Obj::tensor(a, b)), Cell::hcomp(crossing(u, a), crossing(u, b)));
        }
    });
    law(out, "crossing-sum", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            Proto u = r.gen().proto(2);
            Obj a = r.gen().base(), b = r.gen().base();
            r.equal(crossing(u, Obj::sum(a, b)),
                    Cell::copair(Cell::vcomp(crossing(u, a), Cell::promote(Mor::inj0(a, b))),
                                 Cell::vcomp(crossing(u, b), Cell::promote(Mor::inj1(a, b)))));
        }
    });
    law(out, "crossing-swap", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.random; ++i) {
            r.guard([&] {
                Cell a = r.gen().cell(2);
                Obj c = r.gen().obj(1);
                auto [lhs, rhs] = crossing_swap(a, c, val.sig);
                r.equal(lhs, rhs);
            });
        }
    });
    law(out, "crossing-strength", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            Proto u = r.gen().proto(2);
            Obj a = r.gen().obj(1);
            if (o.cfg.samples == 0) {
                r.skip();
                continue;
            }
            Denotation d = denote(crossing(u, a), val);
            auto inputs = sample_pvals(u, default_payloads(), val, o.cfg.depth, 8, o.cfg.seed + i);
            for (const auto& p : inputs) {
                Value v = sample_value(a, val, r.gen().rng());
                PV want = map_leaves(p, u, [&](const PV& leaf) { return attach(leaf, v); });
                PV got = d(p, v);
                r.holds(pval_equal(got, want, u, o.cfg.depth),
                        [&] {
                            return "crossing " + print_proto(u) + " / " + print_obj(a) + " at " +
                                   print_pval(p, u, o.cfg.depth) + ": " + print_pval(got, u, o.cfg.depth);
                        },
                        false);
            }
        }
    });
}

struct Triple {
    Cell alpha, f, g;
};

void iteration_laws(Rows& out, const Valuation& val, const LawOptions& o) {
    std::size_t n = o.small_random;
    auto x_triple = [&](Recorder& r) -> Triple {
        auto& g = r.gen();
        Obj a = g.base();
        switch (g.below(4)) {
            case 0: {
                Cell s = simple_iter_x(g.square(a, 1), val.sig);
                return {s.kid(0), s.kid(1), s.kid(2)};
            }
            case 1: {
                Cell step = Cell::vcomp(Cell::put_r(a), Cell::get_r(a));
                return {step, g.closed_with_top(a, 1), Cell::id_h(Proto::done())};
            }
            case 2: {
                Cell d = comonoid_x(g.finite_proto(0)).first;
                return {d.kid(0), d.kid(1), d.kid(2)};
            }
            default: {
                Cell d = comonad_x(g.finite_proto(0)).second;
                return {d.kid(0), d.kid(1), d.kid(2)};
            }
        }
    };
    auto p_triple = [&](Recorder& r) -> Triple {
        auto& g = r.gen();
        switch (g.below(3)) {
            case 0: {
                Cell s = simple_iter_p(g.square(g.base(), 1), val.sig);
                return {s.kid(0), s.kid(1), s.kid(2)};
            }
            case 1: {
                Cell d = monoid_p(g.finite_proto(1)).first;
                return {d.kid(0), d.kid(1), d.kid(2)};
            }
            default: {
                Cell d = monad_p(g.finite_proto(1)).second;
                return {d.kid(0), d.kid(1), d.kid(2)};
            }
        }
    };
    law(out, "iterx-beta-stop", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Triple t = x_triple(r);
                Cell it = Cell::iter_x(t.alpha, t.f, t.g);
                Proto w = r.bd(t.alpha).right, k = r.bd(t.f).right;
                r.equal(Cell::hcomp(it, Cell::vcomp(star_pi0(w), Cell::id_h(k))), t.f);
            });
        }
    });
    law(out, "iterx-beta-step", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Triple t = x_triple(r);
                Cell it = Cell::iter_x(t.alpha, t.f, t.g);
                Proto w = r.bd(t.alpha).right, k = r.bd(t.f).right;
                r.equal(Cell::hcomp(it, Cell::vcomp(star_pi1(w), Cell::id_h(k))),
                        Cell::hcomp(t.g, Cell::vcomp(t.alpha, it)));
            });
        }
    });
    law(out, "iterp-beta-stop", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Triple t = p_triple(r);
                Cell it = Cell::iter_p(t.alpha, t.f, t.g);
                Proto u = r.bd(t.alpha).left, k = r.bd(t.f).left;
                r.equal(Cell::hcomp(Cell::vcomp(star_inj0(u), Cell::id_h(k)), it), t.f);
            });
        }
    });
    law(out, "iterp-beta-step", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                Triple t = p_triple(r);
                Cell it = Cell::iter_p(t.alpha, t.f, t.g);
                Proto u = r.bd(t.alpha).left, k = r.bd(t.f).left;
                r.equal(Cell::hcomp(Cell::vcomp(star_inj1(u), Cell::id_h(k)), it),
                        Cell::hcomp(Cell::vcomp(t.alpha, it), t.g));
            });
        }
    });
    law(out, "coalgebra-mediation", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < n; ++i) {
            r.guard([&] {
                auto& g = r.gen();
                Proto u = g.finite_proto(0);
                Proto ux = Proto::star_x(u);
                Cell h0 = g.hcell(u, 0);
                Proto v = r.bd(h0).right;
                Cell k;
                switch (g.below(3)) {
                    case 0: k = Cell::id_h(ux); break;
                    case 1: k = Cell::hcomp(comonad_x(u).second, comonad_x(ux).first); break;
                    default:
                        k = Cell::hcomp(comonoid_x(u).first, Cell::vcomp(comonoid_x(u).second, Cell::id_h(ux)));
                        break;
                }
                Proto body = Proto::seq(v, ux);
                Cell h = Cell::times(Cell::pi0(Proto::done(), Proto::seq(u, ux)),
                                     Cell::hcomp(Cell::pi1(Proto::done(), Proto::seq(u, ux)), Cell::vcomp(h0, k)));
                Cell m = Cell::iter_x(Cell::id_h(v), Cell::hcomp(h, Cell::pi0(Proto::done(), body)),
                                      Cell::hcomp(h, Cell::pi1(Proto::done(), body)));
                Cell fm = Cell::times(Cell::pi0(Proto::done(), body),
                                      Cell::hcomp(Cell::pi1(Proto::done(), body), Cell::vcomp(Cell::id_h(v), m)));
                r.equal(Cell::hcomp(h, fm), m);
            });
        }
    });

    auto per_proto = [&](const std::string& id, const std::function<std::pair<Cell, Cell>(Recorder&, const Proto&)>& mk) {
        law(out, id, val, o, [&](Recorder& r) {
            for (std::size_t i = 0; i < n; ++i) {
                r.guard([&] {
                    auto [a, b] = mk(r, r.gen().finite_proto(1));
                    r.equal(a, b);
                });
            }
        });
    };
    per_proto("comonoid-counit-left", [](Recorder&, const Proto& u) {
        auto [d, e] = comonoid_x(u);
        return std::make_pair(Cell::hcomp(d, Cell::vcomp(e, Cell::id_h(Proto::star_x(u)))), Cell::id_h(Proto::star_x(u)));
    });
    per_proto("comonoid-counit-right", [](Recorder&, const Proto& u) {
        auto [d, e] = comonoid_x(u);
        return std::make_pair(Cell::hcomp(d, Cell::vcomp(Cell::id_h(Proto::star_x(u)), e)), Cell::id_h(Proto::star_x(u)));
    });
    per_proto("comonoid-coassoc", [](Recorder&, const Proto& u) {
        auto [d, e] = comonoid_x(u);
        Cell i = Cell::id_h(Proto::star_x(u));
        return std::make_pair(Cell::hcomp(d, Cell::vcomp(d, i)), Cell::hcomp(d, Cell::vcomp(i, d)));
    });
    per_proto("monoid-unit-left", [](Recorder&, const Proto& u) {
        auto [m, e] = monoid_p(u);
        return std::make_pair(Cell::hcomp(Cell::vcomp(e, Cell::id_h(Proto::star_p(u))), m), Cell::id_h(Proto::star_p(u)));
    });
    per_proto("monoid-unit-right", [](Recorder&, const Proto& u) {
        auto [m, e] = monoid_p(u);
        return std::make_pair(Cell::hcomp(Cell::vcomp(Cell::id_h(Proto::star_p(u)), e), m), Cell::id_h(Proto::star_p(u)));
    });
    per_proto("monoid-assoc", [](Recorder&, const Proto& u) {
        auto [m, e] = monoid_p(u);
        Cell i = Cell::id_h(Proto::star_p(u));
        return std::make_pair(Cell::hcomp(Cell::vcomp(m, i), m), Cell::hcomp(Cell::vcomp(i, m), m));
    });
    per_proto("comonad-counit-outer", [](Recorder&, const Proto& u) {
        Proto ux = Proto::star_x(u);
        return std::make_pair(Cell::hcomp(comonad_x(u).second, comonad_x(ux).first), Cell::id_h(ux));
    });
    per_proto("comonad-counit-inner", [](Recorder& r, const Proto& u) {
        Proto ux = Proto::star_x(u);
        Cell mapped = simple_iter_x(comonad_x(u).first, r.sig());
        return std::make_pair(Cell::hcomp(comonad_x(u).second, mapped), Cell::id_h(ux));
    });
    per_proto("comonad-coassoc", [](Recorder& r, const Proto& u) {
        Proto ux = Proto::star_x(u);
        Cell d = comonad_x(u).second;
        return std::make_pair(Cell::hcomp(d, comonad_x(ux).second), Cell::hcomp(d, simple_iter_x(d, r.sig())));
    });
    per_proto("monad-unit-outer", [](Recorder&, const Proto& u) {
        Proto up = Proto::star_p(u);
        return std::make_pair(Cell::hcomp(monad_p(up).first, monad_p(u).second), Cell::id_h(up));
    });
    per_proto("monad-unit-inner", [](Recorder& r, const Proto& u) {
        Proto up = Proto::star_p(u);
        return std::make_pair(Cell::hcomp(simple_iter_p(monad_p(u).first, r.sig()), monad_p(u).second), Cell::id_h(up));
    });
    per_proto("monad-assoc", [](Recorder& r, const Proto& u) {
        Proto up = Proto::star_p(u);
        Cell m = monad_p(u).second;
        return std::make_pair(Cell::hcomp(monad_p(up).second, m), Cell::hcomp(simple_iter_p(m, r.sig()), m));
    });
    per_proto("delta-natural", [](Recorder& r, const Proto& u) {
        Cell h = r.gen().hcell(u, 1);
        Proto w = r.bd(h).right;
        Cell hx = simple_iter_x(h, r.sig());
        return std::make_pair(Cell::hcomp(comonoid_x(u).first, Cell::vcomp(hx, hx)), Cell::hcomp(hx, comonoid_x(w).first));
    });
    per_proto("nabla-natural", [](Recorder& r, const Proto& u) {
        Cell h = r.gen().hcell(u, 1);
        Proto w = r.bd(h).right;
        Cell hp = simple_iter_p(h, r.sig());
        return std::make_pair(Cell::hcomp(Cell::vcomp(hp, hp), monoid_p(w).first), Cell::hcomp(monoid_p(u).first, hp));
    });
}

PV relabel(const PV& leaf) {
    if (leaf->kind != PNode::Kind::Leaf || leaf->label.empty()) return leaf;
    auto n = std::make_shared<PNode>(*leaf);
    n->label += "'";
    return n;
}

void semantics_laws(Rows& out, const Valuation& val, const LawOptions& o) {
    law(out, "payload-relabel", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.small_random; ++i) {
            r.guard([&] {
                Cell c = r.gen().cell(2);
                if (o.cfg.samples == 0) return r.skip();
                Boundary b = r.bd(c);
                Denotation d = denote(c, val);
                auto inputs = sample_pvals(b.left, default_payloads(), val, o.cfg.depth, 8, o.cfg.seed + i);
                bool ok = true;
                std::string why;
                for (const auto& p : inputs) {
                    Value a = sample_value(b.top, val, r.gen().rng());
                    PV lhs = d(map_leaves(p, b.left, relabel), a);
                    PV rhs = map_leaves(d(p, a), b.right, relabel);
                    if (!pval_equal(lhs, rhs, b.right, o.cfg.depth)) {
                        ok = false;
                        why = print_cell(c) + " at " + print_pval(p, b.left, o.cfg.depth);
                        break;
                    }
                }
                r.holds(ok, [&] { return why; }, false);
            });
        }
    });
    law(out, "denote-repeatable", val, o, [&](Recorder& r) {
        for (std::size_t i = 0; i < o.small_random; ++i) {
            r.guard([&] {
                Cell c = r.gen().cell(2);
                r.equal(c, c);
            });
        }
    });
}

void rewrite_laws(Rows& out, const Valuation& val, const LawOptions& o) {
    std::vector<Cell> terms = o.golden;
    TermGen g0(val, law_seed("rewrite-terms", o.cfg.seed));
    terms.push_back(mutation_fixture(g0.base()));
    for (std::size_t i = 0; i < o.rewrite_terms; ++i) terms.push_back(g0.redex_cell(1));

    law(out, "rewrite-soundness", val, o, [&](Recorder& r) {
        for (const auto& t : terms) {
            r.guard([&] {
                bool ok = true;
                bool all_exhaustive = true;
                bool any_decided = false;
                std::string why;
                std::size_t k = 0;
                Config cfg = o.cfg;
                normalize_cell(t, o.rewrite_budget, val.sig, o.rewrite, [&](const Cell& before, const Step& s) {
                    if (!ok) return;
                    cfg.seed = o.cfg.seed + (k++);
                    Boundary b0 = infer_boundary(before, val.sig);
                    Boundary b1 = infer_boundary(s.result, val.sig);
                    if (!boundary_equal(b0, b1)) {
                        ok = false;
                        why = std::string(rule_name(s.rule)) + " at " + print_position(s.pos) + " changed the boundary " +
                              print_boundary(b0) + " to " + print_boundary(b1);
                        return;
                    }
                    Comparison c = compare_cells(before, s.result, val, cfg);
                    all_exhaustive = all_exhaustive && c.exhaustive;
                    any_decided = any_decided || c.verdict != Verdict::Skipped;
                    if (c.verdict == Verdict::Unequal) {
                        ok = false;
                        why = std::string(rule_name(s.rule)) + " at " + print_position(s.pos) + " in " +
                              print_cell(before) + ": " + c.counterexample;
                    }
                });
                if (ok && k > 0 && !any_decided) return r.skip();
                r.holds(ok, [&] { return why; }, all_exhaustive);
            });
        }
    });
    law(out, "rewrite-deterministic", val, o, [&](Recorder& r) {
        for (const auto& t : terms) {
            r.guard([&] {
                auto a = normalize_cell(t, o.rewrite_budget, val.sig, o.rewrite);
                auto b = normalize_cell(t, o.rewrite_budget, val.sig, o.rewrite);
                r.holds(a.result == b.result && a.steps == b.steps, [&] { return print_cell(t); });
            });
        }
    });
    law(out, "rewrite-normal-form", val, o, [&](Recorder& r) {
        for (const auto& t : terms) {
            r.guard([&] {
                auto a = normalize_cell(t, o.rewrite_budget, val.sig, o.rewrite);
                bool ok = a.budget_exhausted || !rewrite_step(a.result, val.sig, o.rewrite);
                r.holds(ok, [&] { return "redex left in " + print_cell(a.result); });
            });
        }
    });
}

}  // namespace

std::vector<LawResult> run_law_group(LawGroup g, const Valuation& val, const LawOptions& opts) {
    Rows out;
    switch (g) {
        case LawGroup::Signature: signature_laws(out, val, opts); break;
        case LawGroup::Protocol: protocol_laws(out, val, opts); break;
        case LawGroup::Corner: corner_laws(out, val, opts); break;
        case LawGroup::Interchange: interchange_laws(out, val, opts); break;
        case LawGroup::Choice: choice_laws(out, val, opts); break;
        case LawGroup::Crossing: crossing_laws(out, val, opts); break;
        case LawGroup::Iteration: iteration_laws(out, val, opts); break;
        case LawGroup::Semantics: semantics_laws(out, val, opts); break;
        case LawGroup::Rewrite: rewrite_laws(out, val, opts); break;
    }
    return out;
}

std::vector<LawResult> run_all_laws(const Valuation& val, const LawOptions& opts) {
    Rows out;
    for (auto g : all_law_groups()) {
        auto rows = run_law_group(g, val, opts);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    std::sort(out.begin(), out.end(), [](const LawResult& a, const LawResult& b) { return a.id < b.id; });
    return out;
}

std::string print_law_line(const LawResult& r) {
    std::ostringstream os;
    switch (r.status()) {
        case LawResult::Status::Pass: os << "PASS "; break;
        case LawResult::Status::Fail: os << "FAIL "; break;
        case LawResult::Status::Skipped: os << "SKIP "; break;
    }
    os << r.id << "  instances=" << r.instances << " exhaustive=" << r.exhaustive;
    if (r.skipped) os << " skipped=" << r.skipped;
    if (r.failed) os << " failed=" << r.failed << "\n  counterexample: " << r.counterexample;
    return os.str();
}

}  // namespace fcn
