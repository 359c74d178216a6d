#include "g2galois/subgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "g2galois/errors.hpp"

namespace g2galois {

namespace {

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::vector<int> mask_elements(std::uint64_t mask, int order) {
    std::vector<int> out;
    for (int i = 0; i < order; ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

} // namespace

bool Subgroup::subset_of(const Subgroup& o) const {
    if (!same_parent(o))
        throw ParentMismatch("subgroups of '" + parent->name() + "' and '" +
                             o.parent->name() + "' live in different groups");
    return (members & o.members) == members;
}

std::vector<int> Subgroup::element_list() const {
    return mask_elements(members, parent->order());
}

std::uint64_t close_subset(const FiniteGroup& g, std::uint64_t seed) {
    std::uint64_t mem = seed | bit(g.identity());
    std::vector<int> all = mask_elements(mem, g.order());
    std::vector<int> frontier = all;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier) {
            for (std::size_t i = 0; i < all.size(); ++i) {
                int b = all[i];
                for (int c : {g.mul(a, b), g.mul(b, a)}) {
                    if (!((mem >> c) & 1u)) {
                        mem |= bit(c);
                        all.push_back(c);
                        next.push_back(c);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return mem;
}

Subgroup make_subgroup(const FiniteGroup& g, std::uint64_t closed_members) {
    if (!((closed_members >> g.identity()) & 1u))
        throw std::invalid_argument("membership mask misses the identity");
    std::vector<int> elems = mask_elements(closed_members, g.order());
    for (int a : elems)
        for (int b : elems)
            if (!((closed_members >> g.mul(a, b)) & 1u))
                throw std::invalid_argument("membership mask is not closed");

    Subgroup s;
    s.parent = &g;
    s.members = closed_members;
    s.order = static_cast<int>(elems.size());

    // greedy witnessed generators, then one reduction pass to drop any
    // generator made redundant by later picks
    std::uint64_t have = bit(g.identity());
    for (int x : elems) {
        if ((have >> x) & 1u) continue;
        s.generators.push_back(x);
        have = close_subset(g, have | bit(x));
        if (have == closed_members) break;
    }
    for (std::size_t i = 0; i < s.generators.size();) {
        std::uint64_t without = bit(g.identity());
        for (std::size_t j = 0; j < s.generators.size(); ++j)
            if (j != i) without |= bit(s.generators[j]);
        if (s.generators.size() > 1 && close_subset(g, without) == closed_members)
            s.generators.erase(s.generators.begin() + static_cast<long>(i));
        else
            ++i;
    }
    return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
    return make_subgroup(g, bit(g.identity()));
}

Subgroup full_subgroup(const FiniteGroup& g) {
    std::uint64_t all = (g.order() == 64) ? ~std::uint64_t{0}
                                          : (bit(g.order()) - 1);
    return make_subgroup(g, all);
}

Subgroup cyclic_subgroup(const FiniteGroup& g, int x) {
    return make_subgroup(g, close_subset(g, bit(x)));
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& xs) {
    std::uint64_t seed = bit(g.identity());
    for (int x : xs) seed |= bit(x);
    return make_subgroup(g, close_subset(g, seed));
}

Subgroup center_subgroup(const FiniteGroup& g) {
    std::uint64_t mem = 0;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y)
            central = g.mul(x, y) == g.mul(y, x);
        if (central) mem |= bit(x);
    }
    return make_subgroup(g, mem); // centralizing set is always a subgroup
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (!a.same_parent(b))
        throw ParentMismatch("cannot intersect subgroups of '" +
                             a.parent->name() + "' and '" + b.parent->name() +
                             "'");
    return make_subgroup(*a.parent, a.members & b.members);
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
    std::set<std::uint64_t> found;
    std::vector<std::uint64_t> frontier;
    for (int x = 0; x < g.order(); ++x) {
        std::uint64_t c = close_subset(g, bit(x));
        if (found.insert(c).second) frontier.push_back(c);
    }
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : frontier) {
            for (int x = 0; x < g.order(); ++x) {
                if ((s >> x) & 1u) continue;
                std::uint64_t t = close_subset(g, s | bit(x));
                if (found.insert(t).second) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (std::uint64_t m : found) out.push_back(make_subgroup(g, m));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members < b.members;
    });
    return out;
}

} // namespace g2galois
