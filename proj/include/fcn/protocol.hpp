#pragma once

#include <compare>
#include <vector>

#include "fcn/signature.hpp"

namespace fcn {

struct Proto {
    enum class Kind { Send, Recv, Done, Seq, Choose, Offer, StarX, StarP };

    Kind kind = Kind::Done;
    Obj obj;                  // Send / Recv
    std::vector<Proto> parts; // Seq items, Choose/Offer (2), stars (1)

    std::strong_ordering operator<=>(const Proto&) const;
    bool operator==(const Proto&) const = default;

    static Proto send(Obj a);
    static Proto recv(Obj a);
    static Proto done() { return Proto{}; }
    static Proto seq(std::vector<Proto> ps);
    static Proto seq(const Proto& a, const Proto& b) { return seq(std::vector<Proto>{a, b}); }
    static Proto choose(Proto u, Proto w);
    static Proto offer(Proto u, Proto w);
    static Proto star_x(Proto u);
    static Proto star_p(Proto u);
    // Unnormalized Seq node, for exercising normalize.
    static Proto raw_seq(std::vector<Proto> ps);

    bool is_done() const { return kind == Kind::Done; }
};

Proto normalize(const Proto& p);

// Flat Seq items of a normalized protocol (empty for Done).
std::vector<Proto> seq_items(const Proto& p);

Proto unfold_star_x(const Proto& p);
Proto unfold_star_p(const Proto& p);

bool proto_equal(const Proto& p, const Proto& q);

// Refolds I x (U * U^x) into U^x and I + (U * U^+) into U^+, bottom up.
Proto fold_stars(const Proto& p);

// True when no StarX / StarP occurs.
bool iteration_free(const Proto& p);

// Objects that appear under Recv anywhere in p.
void recv_objects(const Proto& p, std::vector<Obj>& out);

}  // namespace fcn
