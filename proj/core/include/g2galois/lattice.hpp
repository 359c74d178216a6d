#pragma once

#include <utility>
#include <vector>

#include "g2galois/subgroup.hpp"

namespace g2galois {

// full subgroup lattice of a finite group: all subgroups in enumeration
// order, Hasse cover edges, conjugation orbits and normality flags.
struct SubgroupLattice {
    std::vector<Subgroup> subgroups;
    std::vector<std::pair<int, int>> cover_edges; // (smaller, larger), no mid witness
    std::vector<int> conjugacy_class;             // orbit id per subgroup
    std::vector<int> class_size;                  // per orbit id
    std::vector<char> normal;                     // per subgroup (orbit of size 1)
    int class_count = 0;

    int count() const { return static_cast<int>(subgroups.size()); }
};

SubgroupLattice build_lattice(const FiniteGroup& g);

} // namespace g2galois
