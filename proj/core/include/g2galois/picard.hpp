#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "g2galois/genus2.hpp"

namespace g2galois {

// relation generators between quotient divisor classes, addressed by p1
// node index:
//  - RelAnchor: D_<sigma> is a canonical divisor
//  - RelEqualVia: |H| = |N| with a shared p1 subgroup L <= H cap N forces
//    D_H ~ D_N
//  - RelDiffIsClass: |H| - |N| = |L| with a p1 subgroup L <= H cap N forces
//    D_H - D_N ~ D_L
struct RelAnchor { int sigma_node; };
struct RelEqualVia { int h, n, via; };
struct RelDiffIsClass { int h, n, via; };
using Relation = std::variant<RelAnchor, RelEqualVia, RelDiffIsClass>;

// all relation instances for a context, deduplicated and in a fixed order:
// the anchor, then EqualVia by (h, n, via) ascending with h < n, then
// DiffIsClass by (h, n, via) ascending
std::vector<Relation> collect_relations(const CurveContext& ctx);

enum class Certainty { Proved, AssumedDistinct, Undecided };
const char* certainty_name(Certainty c);

// one hop of a derivation chain: moving from p1 node `from` to node `to`
// changes the divisor class by k_delta canonical multiples
struct ZigzagStep {
    int from = -1;
    int to = -1;
    int k_delta = 0;
    Relation rel;
};

// difference calculus on the quotient divisor classes: a union-find over the
// p1 nodes plus one virtual anchor node for the canonical class, weighted by
// canonical-class offsets, driven to fixpoint by a worklist (a DiffIsClass
// relation fires once the absolute class of its mediator L is known). every
// consistently processed relation also becomes an edge of the derivation
// graph from which zigzag() extracts shortest certificate chains.
//
// the ledger keeps a pointer to its context; keep the context alive for the
// ledger's lifetime.
class PicardLedger {
public:
    PicardLedger(const CurveContext& ctx, const std::vector<Relation>& relations);

    const CurveContext& context() const { return *ctx_; }
    int node_count() const { return anchor_; }

    bool anchored(int node) const;
    // class of node as canonical multiples, when tied to the anchor
    std::optional<int> absolute(int node) const;
    // m with D_h - D_n ~ m * K, or nullopt when underived
    std::optional<int> difference(int h, int n) const;

    // shortest derivation chain h -> n by hop count (ties resolved toward
    // smaller node indices); empty for h == n; throws NoPath when underived
    std::vector<ZigzagStep> zigzag(int h, int n) const;

    // audit hooks
    int relation_count() const { return static_cast<int>(relations_.size()); }
    int fired_count() const { return fired_; }
    int pending_count() const { return pending_; }
    // histogram over |L| of the DiffIsClass relations that fired
    std::vector<std::pair<int, int>> fired_mediator_orders() const;

private:
    struct Edge { int to; int delta; int rel_index; };

    int find(int x) const;          // root with path compression
    int potential(int x) const;     // offset to current root
    void merge(int a, int b, int delta, int rel_index);
    void add_edge(int a, int b, int delta, int rel_index);

    const CurveContext* ctx_;
    int anchor_; // == p1 count; virtual node for the canonical class
    mutable std::vector<int> parent_;
    mutable std::vector<int> offset_; // class(x) - class(parent(x)), K multiples
    std::vector<std::vector<Edge>> adj_;
    std::vector<Relation> relations_;
    int fired_ = 0;
    int pending_ = 0;
    std::vector<std::pair<int, int>> fired_mediators_;
};

// collect_relations + ledger construction
PicardLedger build_ledger(const CurveContext& ctx);
PicardLedger build_ledger(const CurveContext& ctx, const std::vector<Relation>& relations);

// dimension of the space of sections of D_h - D_n, with the certainty of
// the answer and, when the value rests on a derived class identity, the
// derivation chain that proves it
struct LSpace {
    int value = 0;
    Certainty certainty = Certainty::Proved;
    std::vector<ZigzagStep> certificate;
};

// degree d = |H| - |N| decides almost everything: d < 0 gives 0; d > 2
// gives d - 1; the boundary cases consult the ledger (d == 0: 1 iff the
// classes provably agree; d == 2: 2 iff the difference is provably one
// canonical multiple; d == 1 stays undecided)
LSpace ell(const PicardLedger& led, int h, int n);

} // namespace g2galois
