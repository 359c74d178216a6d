#pragma once

#include <memory>
#include <string>
#include <vector>

#include "g2galois/lattice.hpp"

namespace g2galois {

// the seven automorphism groups of genus-2 surfaces, suffixed by order
// where the bare name is ambiguous
enum class AutGroupId { C2, C2xC2, D4_8, C10, D6_12, C3sdD4_24, GL2F3_48 };

inline constexpr AutGroupId all_aut_groups[] = {
    AutGroupId::C2,     AutGroupId::C2xC2,     AutGroupId::D4_8,
    AutGroupId::C10,    AutGroupId::D6_12,     AutGroupId::C3sdD4_24,
    AutGroupId::GL2F3_48,
};

// canonical CLI spelling ("C2", "C2xC2", "D4", "C10", "D6", "C3sdD4", "GL2F3")
const char* aut_group_name(AutGroupId id);

// accepts canonical spellings plus order-suffixed aliases ("D4_8", ...);
// throws std::invalid_argument on anything else
AutGroupId parse_aut_group(const std::string& name);

// a genus-2 surface together with its automorphism group and the quotient
// bookkeeping: sigma is the hyperelliptic involution, and p1_nodes lists (as
// lattice indices) the subgroups H whose quotient X/H is a projective line --
// exactly those of order >= 3, plus <sigma> itself.
struct CurveContext {
    AutGroupId id{};
    std::string name;
    std::shared_ptr<const FiniteGroup> group;
    SubgroupLattice lattice;
    std::vector<std::string> labels; // iso label per subgroup
    int sigma = -1;                  // element index
    int sigma_subgroup = -1;         // lattice index of <sigma>
    std::vector<int> p1_nodes;       // lattice indices, ascending

    int p1_count() const { return static_cast<int>(p1_nodes.size()); }
    const Subgroup& node_subgroup(int p1_node) const {
        return lattice.subgroups[p1_nodes[p1_node]];
    }
    int node_order(int p1_node) const { return node_subgroup(p1_node).order; }
    // "<iso label>#<lattice index>", the display name used in reports
    std::string subgroup_ref(int lattice_index) const;
    std::string node_ref(int p1_node) const { return subgroup_ref(p1_nodes[p1_node]); }
    // p1 node for a lattice index, or -1 when the quotient is not a line
    int p1_node_of(int lattice_index) const;
};

// the unique central involution of g; throws AmbiguousSigma when the count
// of central involutions differs from one
int hyperelliptic_involution(const FiniteGroup& g);

// true iff the quotient X/H is a projective line: |H| >= 3, or H = <sigma>
bool quotient_is_p1(const CurveContext& ctx, int lattice_index);

// the induced divisor D_H has degree |H|; it is very ample iff |H| >= 5
bool very_ample(const CurveContext& ctx, int p1_node);

// ascending orders k >= 5 for which some p1 subgroup of order k exists
std::vector<int> very_ample_orders(const CurveContext& ctx);

// assemble a context; designated_sigma overrides the central-involution
// search (element index, must be a central involution) and is required for
// groups where the center holds more than one involution
CurveContext make_context(AutGroupId id, std::shared_ptr<const FiniteGroup> group,
                          int designated_sigma = -1);

} // namespace g2galois
