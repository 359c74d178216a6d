#pragma once

#include <string>

#include "g2galois/picard.hpp"

namespace g2galois {

// graphviz rendering of the subgroup lattice collapsed to conjugacy classes:
// one node per class labeled "<iso> (xN)" for classes of size N > 1, one
// edge per projected Hasse cover edge. deterministic output.
std::string render_lattice_dot(const CurveContext& ctx);

// same, with the derivation chain h_node -> n_node (p1 node indices)
// overlaid in red: for every chain step the segments H--L and L--N are
// drawn red (existing cover edges are recolored, missing segments are
// added as dashed red edges)
std::string render_lattice_dot(const CurveContext& ctx, const PicardLedger& led,
                               int h_node, int n_node);

} // namespace g2galois
