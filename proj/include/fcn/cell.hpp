#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fcn/protocol.hpp"
#include "fcn/signature.hpp"

namespace fcn {

struct Boundary {
    Proto left;
    Obj top;
    Obj bottom;
    Proto right;
};

// Componentwise equality, protocols up to proto_equal.
bool boundary_equal(const Boundary& a, const Boundary& b);

struct SrcLoc {
    int line = 0;
    int col = 0;
    bool known() const { return line > 0; }
};

class Cell {
public:
    enum class Kind {
        Promote, GetL, PutR, GetR, PutL, IdV, IdH,
        HComp, VComp,
        Pi0, Pi1, Times,
        Inj0, Inj1, Plus,
        CopairC,
        IterX, IterP
    };

    struct Node {
        Kind kind;
        Mor mor;                  // Promote
        Obj obj;                  // corners, IdV
        Proto p0, p1;             // IdH (p0), Pi/Inj (p0, p1)
        std::vector<Cell> kids;   // composites
        SrcLoc loc;               // not part of structural identity
    };

    Cell() = default;

    static Cell promote(Mor f);
    static Cell get_l(Obj a);
    static Cell put_r(Obj a);
    static Cell get_r(Obj a);
    static Cell put_l(Obj a);
    static Cell id_v(Obj a);
    static Cell id_h(Proto u);
    static Cell hcomp(Cell a, Cell b);
    static Cell vcomp(Cell a, Cell b);
    static Cell pi0(Proto u, Proto w);
    static Cell pi1(Proto u, Proto w);
    static Cell times(Cell a, Cell b);
    static Cell inj0(Proto u, Proto w);
    static Cell inj1(Proto u, Proto w);
    static Cell plus(Cell a, Cell b);
    static Cell copair(Cell a, Cell b);
    static Cell iter_x(Cell alpha, Cell f, Cell g);
    static Cell iter_p(Cell alpha, Cell f, Cell g);

    // Left-nested composite chains; a single element returns itself.
    static Cell hchain(const std::vector<Cell>& cs);
    static Cell vchain(const std::vector<Cell>& cs);

    Kind kind() const { return node_->kind; }
    const Node& node() const { return *node_; }
    const Cell& kid(std::size_t i) const { return node_->kids.at(i); }
    std::size_t arity() const { return node_->kids.size(); }
    bool valid() const { return node_ != nullptr; }

    Cell with_loc(SrcLoc loc) const;
    Cell with_kids(std::vector<Cell> kids) const;

    // Structural identity, ignoring source locations.
    bool operator==(const Cell& other) const;
    bool operator!=(const Cell& other) const { return !(*this == other); }

    std::size_t size() const;

private:
    explicit Cell(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Cell make(Node n);

    std::shared_ptr<const Node> node_;
};

Boundary infer_boundary(const Cell& c, const Signature& sig);

bool check_closed_left(const Cell& c, const Signature& sig);

// Flattened factors of nested HComp (resp. VComp) nodes.
std::vector<Cell> hfactors(const Cell& c);
std::vector<Cell> vfactors(const Cell& c);

}  // namespace fcn
