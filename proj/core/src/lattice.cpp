#include "g2galois/lattice.hpp"

#include <algorithm>
#include <map>

namespace g2galois {

SubgroupLattice build_lattice(const FiniteGroup& g) {
    SubgroupLattice lat;
    lat.subgroups = enumerate_subgroups(g);
    const int m = lat.count();

    // Hasse cover edges: strict containment with no witness in between
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (lat.subgroups[i].order >= lat.subgroups[j].order) continue;
            std::uint64_t lo = lat.subgroups[i].members;
            std::uint64_t hi = lat.subgroups[j].members;
            if ((lo & hi) != lo) continue;
            bool covered = true;
            for (int k = 0; k < m && covered; ++k) {
                if (k == i || k == j) continue;
                std::uint64_t mid = lat.subgroups[k].members;
                if ((lo & mid) == lo && (mid & hi) == mid &&
                    mid != lo && mid != hi)
                    covered = false;
            }
            if (covered) lat.cover_edges.emplace_back(i, j);
        }
    }
    std::sort(lat.cover_edges.begin(), lat.cover_edges.end());

    // conjugation orbits; class ids numbered by first appearance
    std::map<std::uint64_t, int> index_of;
    for (int i = 0; i < m; ++i) index_of[lat.subgroups[i].members] = i;
    lat.conjugacy_class.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        if (lat.conjugacy_class[i] != -1) continue;
        int cls = lat.class_count++;
        int size = 0;
        for (int e = 0; e < g.order(); ++e) {
            std::uint64_t conj = 0;
            for (int x : lat.subgroups[i].element_list())
                conj |= std::uint64_t{1} << g.conjugate(e, x);
            int j = index_of.at(conj);
            if (lat.conjugacy_class[j] == -1) {
                lat.conjugacy_class[j] = cls;
                ++size;
            }
        }
        lat.class_size.push_back(size);
    }
    lat.normal.resize(m);
    for (int i = 0; i < m; ++i)
        lat.normal[i] = lat.class_size[lat.conjugacy_class[i]] == 1 ? 1 : 0;

    return lat;
}

} // namespace g2galois
