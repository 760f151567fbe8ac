#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fcn/error.hpp"

namespace fcn {

namespace detail {

template <class T>
std::strong_ordering compare_seq(const std::vector<T>& a, const std::vector<T>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return a.size() <=> b.size();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Objects
// ---------------------------------------------------------------------------

struct Obj {
    enum class Kind { Gen, Unit, Tensor, Sum, Stack };

    Kind kind = Kind::Unit;
    std::string name;        // Gen
    std::vector<Obj> args;   // Tensor factors, Sum (2), Stack (1)

    std::strong_ordering operator<=>(const Obj&) const;
    bool operator==(const Obj&) const = default;

    static Obj gen(std::string name);
    static Obj unit();
    // Smart constructors return normal forms.
    static Obj tensor(std::vector<Obj> factors);
    static Obj tensor(const Obj& a, const Obj& b) { return tensor(std::vector<Obj>{a, b}); }
    static Obj sum(Obj a, Obj b);
    static Obj stack(Obj a);
    // Unnormalized tensor node, for exercising normalize_obj.
    static Obj raw_tensor(std::vector<Obj> factors);

    bool is_unit() const { return kind == Kind::Unit; }
};

Obj normalize_obj(const Obj& e);

// Number of flat tensor factors: 0 for I, n for a tensor, 1 otherwise.
std::size_t arity(const Obj& e);
// Flat tensor factors of a normalized object.
std::vector<Obj> obj_factors(const Obj& e);

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

struct Value {
    enum class Kind { Unit, Atom, Tuple, Inl, Inr, List };

    Kind kind = Kind::Unit;
    std::string atom;
    std::vector<Value> items;  // Tuple / List elements, or the single payload of Inl/Inr

    std::strong_ordering operator<=>(const Value&) const;
    bool operator==(const Value&) const = default;

    static Value unit() { return Value{}; }
    static Value atom_of(std::string a);
    static Value inl(Value v);
    static Value inr(Value v);
    static Value list(std::vector<Value> xs);
    // Flattening tuple constructor: drops units, splices tuples, unwraps singletons.
    static Value tuple(std::vector<Value> xs);

    const Value& payload() const { return items.at(0); }
};

// Flat tensor factors of a value (inverse of Value::tuple).
std::vector<Value> value_factors(const Value& v);
// Splits a value of A (x) B into its A part and its B part, given arity(A).
std::pair<Value, Value> split_value(const Value& v, std::size_t left_arity);
Value join_values(const Value& a, const Value& b);

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

struct Mor {
    enum class Kind {
        Gen, Id, Compose, Tensor, Braid, Inj0, Inj1, Copair,
        DistR, UndistR, DistL, UndistL, Nil, Push, Pop, Const
    };

    Kind kind = Kind::Id;
    std::string name;        // Gen
    std::vector<Obj> objs;   // object parameters
    std::vector<Mor> subs;   // Compose / Tensor / Copair
    Value value;             // Const

    std::strong_ordering operator<=>(const Mor&) const;
    bool operator==(const Mor&) const = default;

    static Mor gen(std::string name);
    static Mor id(Obj a);
    static Mor compose(Mor f, Mor g);  // diagrammatic: f then g
    static Mor tensor(Mor f, Mor g);
    static Mor braid(Obj a, Obj b);
    static Mor inj0(Obj a, Obj b);
    static Mor inj1(Obj a, Obj b);
    static Mor copair(Mor f, Mor g);
    static Mor distr(Obj a, Obj b, Obj c);
    static Mor undistr(Obj a, Obj b, Obj c);
    static Mor distl(Obj a, Obj b, Obj c);
    static Mor undistl(Obj a, Obj b, Obj c);
    static Mor nil(Obj a);
    static Mor push(Obj a);
    static Mor pop(Obj a);
    // A point I -> A picking out a fixed value.
    static Mor constant(Obj a, Value v);
};

// ---------------------------------------------------------------------------
// Signature and valuation
// ---------------------------------------------------------------------------

struct MorType {
    Obj dom;
    Obj cod;
    bool operator==(const MorType&) const = default;
};

struct Signature {
    std::set<std::string> objects;
    std::map<std::string, MorType> morphisms;

    void add_object(const std::string& name) { objects.insert(name); }
    void add_morphism(const std::string& name, Obj dom, Obj cod);
    bool has_object(const std::string& name) const { return objects.count(name) != 0; }
    // Stack objects used anywhere in morphism types.
    std::set<Obj> stack_objects() const;
    // Throws UnknownName if an object leaf is undeclared.
    void check_obj(const Obj& e) const;
};

struct Carrier {
    // Finite carriers list their atoms; countable ones are lists over an element object.
    bool finite = true;
    std::vector<std::string> atoms;
    Obj element;
};

struct Valuation {
    Signature sig;
    std::map<std::string, Carrier> carriers;
    std::map<std::string, std::map<Value, Value>> mor_maps;

    void set_finite(const std::string& obj, std::vector<std::string> atoms);
    void set_countable(const std::string& obj, Obj element);
    void set_map(const std::string& mor, std::map<Value, Value> table);

    // Validates carriers and tables (duplicate-free, total, well-typed).
    void validate() const;
};

MorType infer_mor_type(const Mor& m, const Signature& sig);

bool value_checks(const Value& v, const Obj& e, const Valuation& val);
void require_value(const Value& v, const Obj& e, const Valuation& val, const std::string& where);

Value eval_mor(const Mor& m, const Value& v, const Valuation& val);

bool is_enumerable(const Obj& e, const Valuation& val);
std::vector<Value> enumerate_values(const Obj& e, const Valuation& val);
// Cardinality when enumerable, nullopt otherwise.
std::optional<std::size_t> carrier_size(const Obj& e, const Valuation& val);

using Rng = std::mt19937_64;
// A random value of e; stack and countable carriers get lists of length <= max_len.
Value sample_value(const Obj& e, const Valuation& val, Rng& rng, std::size_t max_len = 3);

}  // namespace fcn
