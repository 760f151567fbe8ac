#pragma once

#include <utility>
#include <vector>

#include "fcn/cell.hpp"

namespace fcn {

// Crossing cell chi_{U,A} with boundary (U, A, A, U).
Cell crossing(const Proto& u, const Obj& a);

// a (x) b, routed through crossing cells.
Cell tensor_cells(const Cell& a, const Cell& b, const Signature& sig);

// Simple passive iterators of a square cell (U, A, A, W).
Cell simple_iter_x(const Cell& a, const Signature& sig);
Cell simple_iter_p(const Cell& a, const Signature& sig);

// The unfolded projections / injections at U^x and U^+.
Cell star_pi0(const Proto& u);
Cell star_pi1(const Proto& u);
Cell star_inj0(const Proto& u);
Cell star_inj1(const Proto& u);

struct CellPair {
    Cell first;
    Cell second;
};

// {delta, counit} and {nabla, unit}.
CellPair comonoid_x(const Proto& u);
CellPair monoid_p(const Proto& u);
// {epsilon, delta2} and {eta, mu}.
CellPair comonad_x(const Proto& u);
CellPair monad_p(const Proto& u);

// {gamma, delta} for (A (+) B)° against A° + B°.
CellPair moral_equiv_send(const Obj& a, const Obj& b);
// The two horizontal arrows between (A (+) B)° and A° + B°.
CellPair moral_iso_send(const Obj& a, const Obj& b);
// The two horizontal arrows between (A (+) B)• and A• x B•.
CellPair moral_iso_recv(const Obj& a, const Obj& b);

// Left-closing cell (I, I, I, (A°)^+) that sends the word w.
Cell word_sender(const std::vector<Value>& w, const Obj& a, const Valuation& val);

// Both routings of a resource C past alpha: chi_{U,C} | alpha, and the braided
// alpha | chi_{W,C}.
CellPair crossing_swap(const Cell& alpha, const Obj& c, const Signature& sig);

}  // namespace fcn
