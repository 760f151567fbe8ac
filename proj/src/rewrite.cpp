#include "fcn/rewrite.hpp"

namespace fcn {

const char* rule_name(RuleId r) {
    switch (r) {
        case RuleId::YankHCircle: return "YankHCircle";
        case RuleId::YankVCircle: return "YankVCircle";
        case RuleId::YankHBullet: return "YankHBullet";
        case RuleId::YankVBullet: return "YankVBullet";
        case RuleId::CornerCompose: return "CornerCompose";
        case RuleId::CornerTensor: return "CornerTensor";
        case RuleId::CornerId: return "CornerId";
        case RuleId::BetaPi0: return "BetaPi0";
        case RuleId::BetaPi1: return "BetaPi1";
        case RuleId::BetaInj0: return "BetaInj0";
        case RuleId::BetaInj1: return "BetaInj1";
        case RuleId::BetaCopair0: return "BetaCopair0";
        case RuleId::BetaCopair1: return "BetaCopair1";
        case RuleId::BetaIterX0: return "BetaIterX0";
        case RuleId::BetaIterX1: return "BetaIterX1";
        case RuleId::BetaIterP0: return "BetaIterP0";
        case RuleId::BetaIterP1: return "BetaIterP1";
        case RuleId::UnitElim: return "UnitElim";
        case RuleId::InterchangeAssoc: return "InterchangeAssoc";
    }
    return "?";
}

std::string print_position(const Position& p) {
    if (p.empty()) return "root";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(p[i]);
    }
    return s;
}

namespace {

using K = Cell::Kind;
using Hit = std::optional<std::pair<Cell, RuleId>>;

bool is_done(const Proto& p) { return proto_equal(p, Proto::done()); }

bool h_unit(const Cell& c) {
    return c.kind() == K::IdH || (c.kind() == K::IdV && c.node().obj.is_unit());
}

bool v_unit(const Cell& c) {
    return c.kind() == K::IdV || (c.kind() == K::IdH && is_done(c.node().p0));
}

bool same_obj(const Cell& a, K ka, const Cell& b, K kb) {
    return a.kind() == ka && b.kind() == kb && a.node().obj == b.node().obj;
}

// The projection cell selected by a context VComp(pi_i, idH K), or a bare pi_i.
std::optional<K> selector(const Cell& y, K k0, K k1) {
    const Cell* head = &y;
    if (y.kind() == K::VComp) {
        if (y.kid(1).kind() != K::IdH) return std::nullopt;
        head = &y.kid(0);
    }
    if (head->kind() == k0 || head->kind() == k1) return head->kind();
    return std::nullopt;
}

Hit hpair(const Cell& x, const Cell& y, const Signature& sig, const RewriteOptions& opts) {
    if (same_obj(x, K::PutR, y, K::GetL)) return {{Cell::id_v(x.node().obj), RuleId::YankHCircle}};
    if (same_obj(x, K::GetR, y, K::PutL)) return {{Cell::id_v(x.node().obj), RuleId::YankHBullet}};
    if (x.kind() == K::Promote && y.kind() == K::Promote) {
        return {{Cell::promote(Mor::tensor(x.node().mor, y.node().mor)), RuleId::CornerTensor}};
    }
    if (x.kind() == K::IdV && y.kind() == K::IdV) {
        return {{Cell::id_v(Obj::tensor(x.node().obj, y.node().obj)), RuleId::CornerTensor}};
    }
    if (x.kind() == K::Promote && y.kind() == K::IdV) {
        return {{Cell::promote(Mor::tensor(x.node().mor, Mor::id(y.node().obj))), RuleId::CornerTensor}};
    }
    if (x.kind() == K::IdV && y.kind() == K::Promote) {
        return {{Cell::promote(Mor::tensor(Mor::id(x.node().obj), y.node().mor)), RuleId::CornerTensor}};
    }
    if (x.kind() == K::Times && y.kind() == K::Pi0) {
        if (opts.mutant_swap_beta_pi &&
            boundary_equal(infer_boundary(x.kid(0), sig), infer_boundary(x.kid(1), sig))) {
            return {{x.kid(1), RuleId::BetaPi0}};
        }
        return {{x.kid(0), RuleId::BetaPi0}};
    }
    if (x.kind() == K::Times && y.kind() == K::Pi1) return {{x.kid(1), RuleId::BetaPi1}};
    if (x.kind() == K::Inj0 && y.kind() == K::Plus) return {{y.kid(0), RuleId::BetaInj0}};
    if (x.kind() == K::Inj1 && y.kind() == K::Plus) return {{y.kid(1), RuleId::BetaInj1}};
    if (x.kind() == K::IterX) {
        if (auto s = selector(y, K::Pi0, K::Pi1)) {
            if (*s == K::Pi0) return {{x.kid(1), RuleId::BetaIterX0}};
            return {{Cell::hcomp(x.kid(2), Cell::vcomp(x.kid(0), x)), RuleId::BetaIterX1}};
        }
    }
    if (y.kind() == K::IterP) {
        if (auto s = selector(x, K::Inj0, K::Inj1)) {
            if (*s == K::Inj0) return {{y.kid(1), RuleId::BetaIterP0}};
            return {{Cell::hcomp(Cell::vcomp(y.kid(0), y), y.kid(2)), RuleId::BetaIterP1}};
        }
    }
    return std::nullopt;
}

Hit vpair(const Cell& x, const Cell& y) {
    if (same_obj(x, K::GetL, y, K::PutR)) return {{Cell::id_h(Proto::send(x.node().obj)), RuleId::YankVCircle}};
    if (same_obj(x, K::GetR, y, K::PutL)) return {{Cell::id_h(Proto::recv(x.node().obj)), RuleId::YankVBullet}};
    if (x.kind() == K::Promote && y.kind() == K::Promote) {
        return {{Cell::promote(Mor::compose(x.node().mor, y.node().mor)), RuleId::CornerCompose}};
    }
    if (x.kind() == K::Promote && y.kind() == K::CopairC) {
        if (x.node().mor.kind == Mor::Kind::Inj0) return {{y.kid(0), RuleId::BetaCopair0}};
        if (x.node().mor.kind == Mor::Kind::Inj1) return {{y.kid(1), RuleId::BetaCopair1}};
    }
    if (x.kind() == K::IdH && y.kind() == K::IdH) {
        return {{Cell::id_h(Proto::seq(x.node().p0, y.node().p0)), RuleId::UnitElim}};
    }
    return std::nullopt;
}

// Rewrites the adjacent columns x | y into rows, padding with vertical
// identities where one column has nothing to exchange.
std::optional<Cell> interchange(const Cell& x, const Cell& y, const Signature& sig) {
    auto a = vfactors(x);
    auto b = vfactors(y);
    if (a.size() < 2 && b.size() < 2) return std::nullopt;
    std::vector<Boundary> ba, bb;
    for (const auto& c : a) ba.push_back(infer_boundary(c, sig));
    for (const auto& c : b) bb.push_back(infer_boundary(c, sig));
    std::size_t i = 0, j = 0;
    Obj xl = ba[0].top, xr = bb[0].top;
    std::vector<Cell> rows;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && is_done(ba[i].right)) {
            rows.push_back(Cell::hcomp(a[i], Cell::id_v(xr)));
            xl = ba[i].bottom;
            ++i;
        } else if (j < b.size() && is_done(bb[j].left)) {
            rows.push_back(Cell::hcomp(Cell::id_v(xl), b[j]));
            xr = bb[j].bottom;
            ++j;
        } else if (i < a.size() && j < b.size() && proto_equal(ba[i].right, bb[j].left)) {
            rows.push_back(Cell::hcomp(a[i], b[j]));
            xl = ba[i].bottom;
            xr = bb[j].bottom;
            ++i;
            ++j;
        } else {
            return std::nullopt;
        }
    }
    if (rows.size() < 2) return std::nullopt;
    return Cell::vchain(rows);
}

Hit at_node(const Cell& c, const Signature& sig, const RewriteOptions& opts) {
    const auto& n = c.node();
    if (n.kind == K::Promote && n.mor.kind == Mor::Kind::Id) return {{Cell::id_v(n.mor.objs[0]), RuleId::CornerId}};

    bool h = n.kind == K::HComp;
    if (!h && n.kind != K::VComp) return std::nullopt;
    const Cell& l = c.kid(0);
    const Cell& r = c.kid(1);

    if (r.kind() == n.kind) {
        Cell left = h ? Cell::hcomp(l, r.kid(0)) : Cell::vcomp(l, r.kid(0));
        return {{h ? Cell::hcomp(left, r.kid(1)) : Cell::vcomp(left, r.kid(1)), RuleId::InterchangeAssoc}};
    }

    bool chained = l.kind() == n.kind;
    const Cell& x = chained ? l.kid(1) : l;
    auto rebuild = [&](const Cell& z) {
        if (!chained) return z;
        return h ? Cell::hcomp(l.kid(0), z) : Cell::vcomp(l.kid(0), z);
    };
    auto drop_x = [&]() {
        if (!chained) return r;
        return h ? Cell::hcomp(l.kid(0), r) : Cell::vcomp(l.kid(0), r);
    };

    auto unit = h ? h_unit : v_unit;
    if (unit(r)) return {{l, RuleId::UnitElim}};
    if (unit(x)) return {{drop_x(), RuleId::UnitElim}};

    Hit hit = h ? hpair(x, r, sig, opts) : vpair(x, r);
    if (hit) return {{rebuild(hit->first), hit->second}};

    if (h && (x.kind() == K::VComp || r.kind() == K::VComp)) {
        if (auto rows = interchange(x, r, sig)) return {{rebuild(*rows), RuleId::InterchangeAssoc}};
    }
    return std::nullopt;
}

std::optional<Step> step_rec(const Cell& c, Position& path, const Signature& sig, const RewriteOptions& opts) {
    for (std::size_t i = 0; i < c.arity(); ++i) {
        path.push_back(i);
        auto s = step_rec(c.kid(i), path, sig, opts);
        path.pop_back();
        if (s) {
            auto kids = c.node().kids;
            kids[i] = s->result;
            s->result = c.with_kids(std::move(kids));
            return s;
        }
    }
    if (auto hit = at_node(c, sig, opts)) return Step{hit->first, hit->second, path};
    return std::nullopt;
}

}  // namespace

std::optional<Step> rewrite_step(const Cell& c, const Signature& sig, const RewriteOptions& opts) {
    Position path;
    return step_rec(c, path, sig, opts);
}

RewriteReport normalize_cell(const Cell& c, std::size_t budget, const Signature& sig, const RewriteOptions& opts,
                             const std::function<void(const Cell&, const Step&)>& on_step) {
    RewriteReport rep;
    rep.result = c;
    while (rep.steps.size() < budget) {
        auto s = rewrite_step(rep.result, sig, opts);
        if (!s) return rep;
        if (on_step) on_step(rep.result, *s);
        rep.steps.emplace_back(s->rule, s->pos);
        rep.result = s->result;
    }
    rep.budget_exhausted = rewrite_step(rep.result, sig, opts).has_value();
    return rep;
}

}  // namespace fcn
