#include "g2galois/fingerprint.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "g2galois/errors.hpp"

namespace g2galois {

IsoFingerprint fingerprint(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    std::vector<int> elems = h.element_list();

    IsoFingerprint fp;
    fp.order = h.order;

    fp.is_abelian = true;
    for (int a : elems)
        for (int b : elems)
            if (g.mul(a, b) != g.mul(b, a)) { fp.is_abelian = false; goto abelian_done; }
abelian_done:

    fp.exponent = 1;
    fp.involution_count = 0;
    fp.is_cyclic = false;
    for (int x : elems) {
        int k = g.element_order(x);
        fp.exponent = std::lcm(fp.exponent, k);
        if (k == 2) ++fp.involution_count;
        if (k == h.order) fp.is_cyclic = true;
    }

    fp.center_order = 0;
    for (int x : elems) {
        bool central = true;
        for (int y : elems)
            if (g.mul(x, y) != g.mul(y, x)) { central = false; break; }
        if (central) ++fp.center_order;
    }

    // conjugacy classes within h
    std::uint64_t seen = 0;
    fp.conjugacy_class_count = 0;
    for (int x : elems) {
        if ((seen >> x) & 1u) continue;
        ++fp.conjugacy_class_count;
        for (int y : elems) seen |= std::uint64_t{1} << g.conjugate(y, x);
    }

    // derived subgroup: closure of all commutators within h
    std::uint64_t comm = std::uint64_t{1} << g.identity();
    for (int a : elems)
        for (int b : elems)
            comm |= std::uint64_t{1} << g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
    fp.derived_subgroup_order = make_subgroup(g, close_subset(g, comm)).order;

    return fp;
}

namespace {

struct LabelEntry {
    IsoFingerprint fp;
    std::string label;
};

// canonical constructions for every non-cyclic isomorphism type occurring
// among subgroups of the catalog groups, plus a few nearby types so that
// close misses label distinctly rather than falling through to UnknownType
const std::vector<LabelEntry>& label_table() {
    static const std::vector<LabelEntry> table = [] {
        auto perm = [](const char* label, int expected_order,
                       std::initializer_list<const char*> cycles) {
            std::vector<Permutation> gens;
            int degree = 0;
            for (const char* c : cycles)
                degree = std::max(degree, Permutation::max_point(c));
            for (const char* c : cycles)
                gens.push_back(Permutation::parse_cycles(c, degree));
            FiniteGroup g = FiniteGroup::from_permutations(label, std::move(gens));
            if (g.order() != expected_order)
                throw std::logic_error(std::string("label table: ") + label +
                                       " built with wrong order");
            return LabelEntry{fingerprint(full_subgroup(g)), label};
        };
        auto mat = [](const char* label, int expected_order,
                      std::initializer_list<MatF3> ms) {
            FiniteGroup g = FiniteGroup::from_matrices(label, std::vector<MatF3>(ms));
            if (g.order() != expected_order)
                throw std::logic_error(std::string("label table: ") + label +
                                       " built with wrong order");
            return LabelEntry{fingerprint(full_subgroup(g)), label};
        };

        std::vector<LabelEntry> t;
        t.push_back(perm("C2xC2", 4, {"(1 2)", "(3 4)"}));
        t.push_back(perm("C2xC2xC2", 8, {"(1 2)", "(3 4)", "(5 6)"}));
        t.push_back(perm("C2xC4", 8, {"(1 2)", "(3 4 5 6)"}));
        t.push_back(perm("C2xC6", 12, {"(1 2)", "(3 4 5 6 7 8)"}));
        t.push_back(perm("S3", 6, {"(1 2 3)", "(1 2)"}));
        t.push_back(perm("D4", 8, {"(1 2 3 4)", "(1 3)"}));
        t.push_back(perm("D6", 12, {"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"}));
        t.push_back(perm("Dic3", 12, {"(1 2 3)", "(2 3)(4 5 6 7)"}));
        t.push_back(perm("A4", 12, {"(1 2 3)", "(1 2)(3 4)"}));
        t.push_back(perm("SD16", 16, {"(1 2 3 4 5 6 7 8)", "(2 4)(3 7)(6 8)"}));
        t.push_back(perm("C3sdD4", 24, {"(1 2 3)", "(2 3)(4 5 6 7)", "(5 7)"}));
        t.push_back(mat("Q8", 8, {MatF3{{0, 2, 1, 0}}, MatF3{{1, 1, 1, 2}}}));
        t.push_back(mat("SL2F3", 24, {MatF3{{1, 1, 0, 1}}, MatF3{{0, 2, 1, 0}}}));
        t.push_back(mat("GL2F3", 48, {MatF3{{1, 1, 0, 1}}, MatF3{{0, 1, 1, 0}}}));

        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i].fp.is_cyclic)
                throw std::logic_error("label table: cyclic entry " + t[i].label);
            for (std::size_t j = i + 1; j < t.size(); ++j)
                if (t[i].fp == t[j].fp)
                    throw std::logic_error("label table: fingerprint collision " +
                                           t[i].label + " vs " + t[j].label);
        }
        return t;
    }();
    return table;
}

} // namespace

std::string iso_label(const IsoFingerprint& fp) {
    if (fp.is_cyclic) return "C" + std::to_string(fp.order);
    for (const LabelEntry& e : label_table())
        if (e.fp == fp) return e.label;
    return "UnknownType";
}

namespace {

// breadth-first word decomposition: for each element of h, how to reach it
// from the identity by right-multiplying generators
struct WordTable {
    std::vector<int> elems;        // ascending element indices
    std::vector<int> pos;          // parent-group element -> position in elems
    std::vector<int> prev;         // position -> predecessor position
    std::vector<int> via;          // position -> generator index used
};

WordTable word_table(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    WordTable w;
    w.elems = h.element_list();
    w.pos.assign(g.order(), -1);
    for (std::size_t i = 0; i < w.elems.size(); ++i)
        w.pos[w.elems[i]] = static_cast<int>(i);
    w.prev.assign(w.elems.size(), -1);
    w.via.assign(w.elems.size(), -1);

    std::vector<int> queue{g.identity()};
    std::vector<bool> seen(w.elems.size(), false);
    seen[w.pos[g.identity()]] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (std::size_t gi = 0; gi < h.generators.size(); ++gi) {
            int y = g.mul(x, h.generators[gi]);
            int p = w.pos[y];
            if (!seen[p]) {
                seen[p] = true;
                w.prev[p] = w.pos[x];
                w.via[p] = static_cast<int>(gi);
                queue.push_back(y);
            }
        }
    }
    for (bool s : seen)
        if (!s) throw std::logic_error("witnessed generators fail to generate");
    return w;
}

} // namespace

bool is_isomorphic(const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return false;
    const FiniteGroup& ga = *a.parent;
    const FiniteGroup& gb = *b.parent;
    if (a.order == 1) return true;

    WordTable words = word_table(a);
    std::vector<int> a_elems = words.elems;
    std::vector<int> b_elems = b.element_list();

    // candidate images per generator, filtered by element order
    std::vector<std::vector<int>> candidates;
    for (int gen : a.generators) {
        std::vector<int> c;
        int want = ga.element_order(gen);
        for (int y : b_elems)
            if (gb.element_order(y) == want) c.push_back(y);
        if (c.empty()) return false;
        candidates.push_back(std::move(c));
    }

    std::vector<int> choice(a.generators.size(), 0);
    std::vector<int> image(a_elems.size(), -1);

    auto try_choice = [&]() -> bool {
        // extend generator images along the word table
        std::fill(image.begin(), image.end(), -1);
        image[words.pos[ga.identity()]] = gb.identity();
        // positions are discovered in queue order in word_table, but prev
        // pointers always reference earlier-discovered elements, so a simple
        // fixpoint sweep fills everything
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t p = 0; p < a_elems.size(); ++p) {
                if (image[p] != -1 || words.prev[p] < 0) continue;
                int prev_img = image[words.prev[p]];
                if (prev_img == -1) continue;
                image[p] = gb.mul(prev_img, candidates[words.via[p]][choice[words.via[p]]]);
                progress = true;
            }
        }
        // bijectivity onto b
        std::uint64_t hit = 0;
        for (std::size_t p = 0; p < a_elems.size(); ++p) {
            if (image[p] == -1 || !b.contains(image[p])) return false;
            std::uint64_t bitp = std::uint64_t{1} << image[p];
            if (hit & bitp) return false;
            hit |= bitp;
        }
        // homomorphism on all pairs
        for (int x : a_elems)
            for (int y : a_elems) {
                int xy = ga.mul(x, y);
                if (gb.mul(image[words.pos[x]], image[words.pos[y]]) !=
                    image[words.pos[xy]])
                    return false;
            }
        return true;
    };

    // odometer over candidate tuples
    while (true) {
        if (try_choice()) return true;
        std::size_t k = 0;
        while (k < choice.size()) {
            if (++choice[k] < static_cast<int>(candidates[k].size())) break;
            choice[k] = 0;
            ++k;
        }
        if (k == choice.size()) return false;
    }
}

} // namespace g2galois
