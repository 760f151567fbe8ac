#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fcn/cell.hpp"

namespace fcn {

// ---------------------------------------------------------------------------
// Protocol-shaped values
// ---------------------------------------------------------------------------

struct PNode;
using PV = std::shared_ptr<const PNode>;

// A component computed at most once; observation is thread safe and idempotent.
class Lazy {
public:
    explicit Lazy(std::function<PV()> thunk) : thunk_(std::move(thunk)) {}
    explicit Lazy(PV ready);
    const PV& get() const;

private:
    mutable std::once_flag once_;
    mutable PV value_;
    mutable std::function<PV()> thunk_;
};

struct PNode {
    enum class Kind { Leaf, Send, Table, Pair, Left, Right };

    Kind kind = Kind::Leaf;

    // Leaf: a payload. Either an opaque label or an inner pval, followed by
    // the flat factors appended by the cells it passed through.
    std::string label;
    PV inner;
    long ref = -1;               // placeholder used by sampled generators
    std::vector<Value> factors;

    // Send: value and continuation; Left/Right: continuation.
    Value value;
    PV next;

    // Table: one continuation per carrier value, in carrier order.
    std::vector<std::pair<Value, PV>> table;

    // Pair: lazily computed components.
    std::shared_ptr<Lazy> first;
    std::shared_ptr<Lazy> second;
};

PV pv_leaf(std::string label);
PV pv_send(Value v, PV next);
PV pv_table(std::vector<std::pair<Value, PV>> entries);
PV pv_pair(PV a, PV b);
PV pv_lazy_pair(std::function<PV()> a, std::function<PV()> b);
PV pv_left(PV p);
PV pv_right(PV p);

// Payload bookkeeping: attach appends the factors of b; split undoes it.
PV attach(const PV& x, const Value& b);
std::pair<PV, Value> split_payload(const PV& p, std::size_t n);

// Stack of protocols read outermost first; the leaves sit after the last one.
using ProtoStack = std::vector<Proto>;

// Rebuilds p with fn applied at every leaf position of the protocol stack.
PV map_leaves(const PV& p, const ProtoStack& ps, const std::function<PV(const PV&)>& fn);
PV map_leaves(const PV& p, const Proto& u, const std::function<PV(const PV&)>& fn);

bool pval_equal(const PV& p, const PV& q, const Proto& shape, std::size_t depth);

// ---------------------------------------------------------------------------
// Denotations
// ---------------------------------------------------------------------------

using Denotation = std::function<PV(const PV& left, const Value& top)>;

Denotation denote(const Cell& c, const Valuation& val);

struct Config {
    std::size_t depth = 4;
    std::size_t samples = 64;
    std::uint64_t seed = 0xFCC;
    std::size_t budget = 10000;
};

std::vector<PV> enumerate_pvals(const Proto& u, const std::vector<PV>& payloads, const Valuation& val);
bool pvals_enumerable(const Proto& u, const Valuation& val);
// Exact count when enumerable, saturating at `cap`.
std::size_t count_pvals(const Proto& u, std::size_t payloads, const Valuation& val, std::size_t cap);

std::vector<PV> sample_pvals(const Proto& u, const std::vector<PV>& payloads, const Valuation& val,
                             std::size_t depth, std::size_t n, std::uint64_t seed);

enum class Verdict { Equal, Unequal, Skipped };

struct Comparison {
    Verdict verdict = Verdict::Equal;
    bool exhaustive = false;
    std::size_t inputs = 0;
    std::string counterexample;
};

// Extensional comparison of two cells with equal boundaries.
Comparison compare_cells(const Cell& c1, const Cell& c2, const Valuation& val, const Config& cfg);
bool cells_equal(const Cell& c1, const Cell& c2, const Valuation& val, const Config& cfg);

// Above this many inputs an enumerable boundary is sampled instead.
inline constexpr std::size_t kEnumerationCap = 4096;

// The standard opaque payloads used as left inputs.
std::vector<PV> default_payloads();

}  // namespace fcn
