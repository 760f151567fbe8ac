#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcn/cell.hpp"
#include "fcn/semantics.hpp"

namespace fcn {

// ---------------------------------------------------------------------------
// Printers. Every printed term reparses to the same structure.
// ---------------------------------------------------------------------------

std::string print_obj(const Obj& e);
std::string print_value(const Value& v);
std::string print_proto(const Proto& p);
std::string print_mor(const Mor& m);
std::string print_cell(const Cell& c);
std::string print_boundary(const Boundary& b);
// Prints a pval read along `shape`; handles below `depth` print as #handle(...).
std::string print_pval(const PV& p, const Proto& shape, std::size_t depth);

// ---------------------------------------------------------------------------
// .fcn files
// ---------------------------------------------------------------------------

struct Program {
    Valuation val;
    std::map<std::string, Proto> protocols;
    std::vector<std::pair<std::string, Cell>> cells;  // declaration order

    std::optional<Cell> find_cell(const std::string& name) const;
};

Program parse_program(const std::string& text);
Program load_program(const std::string& path);

// Fragment parsers; names resolve against `ctx` when given.
Obj parse_obj(const std::string& text);
Value parse_value(const std::string& text);
Proto parse_proto(const std::string& text, const Program* ctx = nullptr);
Mor parse_mor(const std::string& text);
Cell parse_cell(const std::string& text, const Program* ctx = nullptr);

}  // namespace fcn
