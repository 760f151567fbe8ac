#include "fcn/protocol.hpp"

#include <set>
#include <utility>

namespace fcn {

std::strong_ordering Proto::operator<=>(const Proto& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (auto c = obj <=> o.obj; c != 0) return c;
    return detail::compare_seq(parts, o.parts);
}

Proto Proto::send(Obj a) {
    Proto p;
    p.kind = Kind::Send;
    p.obj = normalize_obj(a);
    return p;
}

Proto Proto::recv(Obj a) {
    Proto p;
    p.kind = Kind::Recv;
    p.obj = normalize_obj(a);
    return p;
}

Proto Proto::raw_seq(std::vector<Proto> ps) {
    Proto p;
    p.kind = Kind::Seq;
    p.parts = std::move(ps);
    return p;
}

Proto Proto::seq(std::vector<Proto> ps) {
    std::vector<Proto> flat;
    for (auto& x : ps) {
        Proto n = normalize(x);
        if (n.kind == Kind::Done) continue;
        if (n.kind == Kind::Seq) {
            flat.insert(flat.end(), n.parts.begin(), n.parts.end());
        } else {
            flat.push_back(std::move(n));
        }
    }
    if (flat.empty()) return done();
    if (flat.size() == 1) return flat.front();
    return raw_seq(std::move(flat));
}

namespace {

Proto binary(Proto::Kind k, Proto u, Proto w) {
    Proto p;
    p.kind = k;
    p.parts = {normalize(u), normalize(w)};
    return p;
}

Proto unary(Proto::Kind k, Proto u) {
    Proto p;
    p.kind = k;
    p.parts = {normalize(u)};
    return p;
}

}  // namespace

Proto Proto::choose(Proto u, Proto w) { return binary(Kind::Choose, std::move(u), std::move(w)); }
Proto Proto::offer(Proto u, Proto w) { return binary(Kind::Offer, std::move(u), std::move(w)); }
Proto Proto::star_x(Proto u) { return unary(Kind::StarX, std::move(u)); }
Proto Proto::star_p(Proto u) { return unary(Kind::StarP, std::move(u)); }

Proto normalize(const Proto& p) {
    switch (p.kind) {
        case Proto::Kind::Done:
            return p;
        case Proto::Kind::Send:
            return Proto::send(p.obj);
        case Proto::Kind::Recv:
            return Proto::recv(p.obj);
        case Proto::Kind::Seq:
            return Proto::seq(p.parts);
        case Proto::Kind::Choose:
            return Proto::choose(p.parts[0], p.parts[1]);
        case Proto::Kind::Offer:
            return Proto::offer(p.parts[0], p.parts[1]);
        case Proto::Kind::StarX:
            return Proto::star_x(p.parts[0]);
        case Proto::Kind::StarP:
            return Proto::star_p(p.parts[0]);
    }
    return p;
}

std::vector<Proto> seq_items(const Proto& p) {
    if (p.kind == Proto::Kind::Done) return {};
    if (p.kind == Proto::Kind::Seq) return p.parts;
    return {p};
}

Proto unfold_star_x(const Proto& p) {
    if (p.kind != Proto::Kind::StarX) throw Error(ErrorKind::NotAStar, "unfold_star_x on a non-^x protocol");
    return Proto::choose(Proto::done(), Proto::seq(p.parts[0], p));
}

Proto unfold_star_p(const Proto& p) {
    if (p.kind != Proto::Kind::StarP) throw Error(ErrorKind::NotAStar, "unfold_star_p on a non-^+ protocol");
    return Proto::offer(Proto::done(), Proto::seq(p.parts[0], p));
}

namespace {

using Visited = std::set<std::pair<Proto, Proto>>;

bool bisim(const Proto& p, const Proto& q, Visited& seen) {
    if (p == q) return true;
    if (!seen.insert({p, q}).second) return true;

    using K = Proto::Kind;
    if (p.kind == K::StarX && q.kind == K::StarX) return bisim(unfold_star_x(p), unfold_star_x(q), seen);
    if (p.kind == K::StarP && q.kind == K::StarP) return bisim(unfold_star_p(p), unfold_star_p(q), seen);
    if (p.kind == K::StarX && q.kind == K::Choose) return bisim(unfold_star_x(p), q, seen);
    if (q.kind == K::StarX && p.kind == K::Choose) return bisim(p, unfold_star_x(q), seen);
    if (p.kind == K::StarP && q.kind == K::Offer) return bisim(unfold_star_p(p), q, seen);
    if (q.kind == K::StarP && p.kind == K::Offer) return bisim(p, unfold_star_p(q), seen);

    if (p.kind != q.kind) return false;
    switch (p.kind) {
        case K::Done:
            return true;
        case K::Send:
        case K::Recv:
            return p.obj == q.obj;
        case K::Seq:
        case K::Choose:
        case K::Offer:
            if (p.parts.size() != q.parts.size()) return false;
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
                if (!bisim(p.parts[i], q.parts[i], seen)) return false;
            }
            return true;
        default:
            return false;
    }
}

}  // namespace

bool proto_equal(const Proto& p, const Proto& q) {
    Visited seen;
    return bisim(normalize(p), normalize(q), seen);
}

bool iteration_free(const Proto& p) {
    if (p.kind == Proto::Kind::StarX || p.kind == Proto::Kind::StarP) return false;
    for (const auto& x : p.parts) {
        if (!iteration_free(x)) return false;
    }
    return true;
}

Proto fold_stars(const Proto& p0) {
    Proto p = normalize(p0);
    for (auto& x : p.parts) x = fold_stars(x);
    p = normalize(p);
    bool x_shape = p.kind == Proto::Kind::Choose;
    bool p_shape = p.kind == Proto::Kind::Offer;
    if ((x_shape || p_shape) && p.parts[0].is_done()) {
        auto items = seq_items(p.parts[1]);
        auto want = x_shape ? Proto::Kind::StarX : Proto::Kind::StarP;
        if (items.size() >= 2 && items.back().kind == want) {
            std::vector<Proto> body(items.begin(), items.end() - 1);
            if (Proto::seq(body) == items.back().parts[0]) return items.back();
        }
    }
    return p;
}

void recv_objects(const Proto& p, std::vector<Obj>& out) {
    if (p.kind == Proto::Kind::Recv) out.push_back(p.obj);
    for (const auto& x : p.parts) recv_objects(x, out);
}

}  // namespace fcn
