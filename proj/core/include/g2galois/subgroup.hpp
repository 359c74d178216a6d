#pragma once

#include <cstdint>
#include <vector>

#include "g2galois/group.hpp"

namespace g2galois {

// subgroup of a FiniteGroup, stored as a 64-bit membership mask (bit i set
// iff element i belongs). subgroups hold a non-owning pointer to their
// parent group, which must outlive them.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::uint64_t members = 0;
    int order = 0;
    std::vector<int> generators; // irredundant witnessed generating set

    bool contains(int x) const { return (members >> x) & 1u; }
    bool same_parent(const Subgroup& o) const { return parent == o.parent; }
    bool subset_of(const Subgroup& o) const; // throws ParentMismatch
    std::vector<int> element_list() const;   // ascending element indices
};

// smallest product-closed superset of `seed` (the generated subgroup;
// the identity is always included)
std::uint64_t close_subset(const FiniteGroup& g, std::uint64_t seed);

// wrap an already-closed membership mask; throws std::invalid_argument if
// the mask is not closed under multiplication or misses the identity
Subgroup make_subgroup(const FiniteGroup& g, std::uint64_t closed_members);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup cyclic_subgroup(const FiniteGroup& g, int x);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& xs);
Subgroup center_subgroup(const FiniteGroup& g);

// intersection of two subgroups of the same parent; throws ParentMismatch
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// every subgroup of g, found by breadth-first closure (seed with all cyclic
// subgroups, then repeatedly extend each known subgroup by one outside
// element and close, until no new subgroup appears). sorted by
// (order, membership mask); the position in this vector is the stable
// enumeration index used throughout the library.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);

} // namespace g2galois
