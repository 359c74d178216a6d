#pragma once

// brute-force cross-checks for the test suite. these deliberately avoid the
// library's enumeration and ledger internals: subgroups are rediscovered by
// exhaustive subset scans / two-generator closures with joins, histograms by
// re-deriving the degree case analysis from raw bitmask popcounts.

#include <cstdint>
#include <string>
#include <vector>

#include "g2galois/catalog.hpp"
#include "g2galois/picard.hpp"

namespace g2galois::oracle {

// every subgroup of g as a member bitmask, sorted by (size, mask). groups of
// order <= 16 are scanned subset-by-subset; larger ones get all closures of
// <= 2 elements plus pairwise joins iterated to fixpoint.
std::vector<std::uint64_t> exhaustive_subgroups(const FiniteGroup& g);

// true iff `trials` deterministic shuffles of the relation list leave every
// ordered pair's section-space outcome (value, certainty, chain length,
// chain delta sum) identical to the unshuffled ledger's
bool shuffled_ledger_equivalence(const CurveContext& ctx, int trials);

struct HistogramAudit {
    bool agree = true;
    std::string detail; // first disagreement, empty when agree
};

// recompute every very-ample decomposition histogram from scratch degree
// arithmetic (bitmask popcounts + the boundary-case ledger queries) and
// compare against decompose()/decompose_by_order()
HistogramAudit histogram_consistency(const CurveContext& ctx, const PicardLedger& led);

struct DotAudit {
    bool well_formed = false;
    std::string detail;
    int node_count = 0;
    int edge_count = 0;
    int red_edge_count = 0;
};

// minimal DOT grammar check: one graph block, node statements, undirected
// edge statements with optional attribute lists
DotAudit dot_well_formed(const std::string& dot_text);

} // namespace g2galois::oracle
