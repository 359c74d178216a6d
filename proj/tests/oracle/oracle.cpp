#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "g2galois/decomp.hpp"

namespace g2galois::oracle {

namespace {

// naive closure: rescan all products until nothing new appears
std::uint64_t closure(const FiniteGroup& g, std::uint64_t seed) {
    std::uint64_t cur = seed | 1ull; // identity is element 0
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < g.order(); ++a) {
            if (!(cur >> a & 1ull)) continue;
            for (int b = 0; b < g.order(); ++b) {
                if (!(cur >> b & 1ull)) continue;
                int p = g.mul(a, b);
                if (!(cur >> p & 1ull)) {
                    cur |= 1ull << p;
                    grew = true;
                }
            }
        }
    }
    return cur;
}

bool is_closed(const FiniteGroup& g, std::uint64_t mask) {
    for (int a = 0; a < g.order(); ++a) {
        if (!(mask >> a & 1ull)) continue;
        for (int b = 0; b < g.order(); ++b) {
            if (!(mask >> b & 1ull)) continue;
            if (!(mask >> g.mul(a, b) & 1ull)) return false;
        }
    }
    return true;
}

void sort_masks(std::vector<std::uint64_t>& masks) {
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a);
        int pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
}

} // namespace

std::vector<std::uint64_t> exhaustive_subgroups(const FiniteGroup& g) {
    const int n = g.order();
    std::set<std::uint64_t> found;

    if (n <= 16) {
        // full subset scan: a subgroup is a closed subset containing identity
        const std::uint64_t limit = 1ull << n;
        for (std::uint64_t mask = 1; mask < limit; mask += 2)
            if (is_closed(g, mask)) found.insert(mask);
    } else {
        // all <= 2-generated subgroups, then pairwise joins to fixpoint
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                found.insert(closure(g, (1ull << a) | (1ull << b)));
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::uint64_t> snapshot(found.begin(), found.end());
            for (std::size_t i = 0; i < snapshot.size(); ++i)
                for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                    std::uint64_t join = closure(g, snapshot[i] | snapshot[j]);
                    if (found.insert(join).second) grew = true;
                }
        }
    }

    std::vector<std::uint64_t> result(found.begin(), found.end());
    sort_masks(result);
    return result;
}

namespace {

using PairOutcome = std::tuple<int, int, std::size_t, int>;

std::vector<PairOutcome> ledger_signature(const CurveContext& ctx,
                                          const PicardLedger& led) {
    std::vector<PairOutcome> sig;
    for (int h = 0; h < ctx.p1_count(); ++h)
        for (int n = 0; n < ctx.p1_count(); ++n) {
            LSpace ls = ell(led, h, n);
            int delta_sum = 0;
            for (const ZigzagStep& s : ls.certificate) delta_sum += s.k_delta;
            sig.emplace_back(ls.value, static_cast<int>(ls.certainty),
                             ls.certificate.size(), delta_sum);
        }
    return sig;
}

} // namespace

bool shuffled_ledger_equivalence(const CurveContext& ctx, int trials) {
    std::vector<Relation> relations = collect_relations(ctx);
    PicardLedger base(ctx, relations);
    const std::vector<PairOutcome> expected = ledger_signature(ctx, base);

    std::mt19937 rng(20260819u);
    std::vector<Relation> shuffled = relations;
    for (int t = 0; t < trials; ++t) {
        // explicit Fisher-Yates so the sequence is identical on every
        // platform regardless of std::shuffle internals
        for (std::size_t i = shuffled.size(); i > 1; --i) {
            std::size_t j = rng() % i;
            std::swap(shuffled[i - 1], shuffled[j]);
        }
        PicardLedger led(ctx, shuffled);
        if (ledger_signature(ctx, led) != expected) return false;
    }
    return true;
}

HistogramAudit histogram_consistency(const CurveContext& ctx,
                                     const PicardLedger& led) {
    HistogramAudit audit;
    auto fail = [&](const std::string& detail) {
        if (audit.agree) {
            audit.agree = false;
            audit.detail = detail;
        }
    };

    // orders recomputed from raw membership masks, not Subgroup::order
    std::vector<int> popcounts(ctx.p1_count());
    for (int i = 0; i < ctx.p1_count(); ++i)
        popcounts[i] = std::popcount(ctx.node_subgroup(i).members);

    std::set<int> orders;
    for (int i = 0; i < ctx.p1_count(); ++i)
        if (popcounts[i] >= 5) orders.insert(popcounts[i]);

    for (int order : orders) {
        std::map<int, long long> by_order_expected;
        bool first_h = true;
        for (int h = 0; h < ctx.p1_count(); ++h) {
            if (popcounts[h] != order) continue;
            std::map<int, long long> expected;
            for (int n = 0; n < ctx.p1_count(); ++n) {
                int d = popcounts[h] - popcounts[n];
                int value = 0;
                if (h == n) {
                    value = 1;
                } else if (d < 0 || d == 1) {
                    value = 0;
                } else if (d == 0) {
                    std::optional<int> diff = led.difference(h, n);
                    value = diff && *diff == 0 ? 1 : 0;
                } else if (d == 2) {
                    std::optional<int> diff = led.difference(h, n);
                    value = diff && *diff == 1 ? 2 : 1;
                } else {
                    value = d - 1;
                }
                ++expected[value - 1];
            }

            DecompositionReport per_h = decompose(led, h);
            if (per_h.histogram != expected)
                fail("per-subgroup histogram disagrees for " + ctx.node_ref(h));
            if (first_h) {
                by_order_expected = expected;
                first_h = false;
            } else if (expected != by_order_expected) {
                fail("subgroups of order " + std::to_string(order) +
                     " disagree among themselves");
            }
        }
        DecompositionReport by_order = decompose_by_order(led, order);
        if (by_order.histogram != by_order_expected)
            fail("by-order histogram disagrees at order " + std::to_string(order));
    }
    return audit;
}

DotAudit dot_well_formed(const std::string& dot_text) {
    DotAudit audit;
    auto fail = [&](const std::string& detail) {
        audit.well_formed = false;
        audit.detail = detail;
        return audit;
    };

    std::vector<std::string> lines;
    {
        std::istringstream in(dot_text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(line);
    }
    if (lines.size() < 2) return fail("too short");
    if (lines.front().rfind("graph ", 0) != 0 || lines.front().back() != '{')
        return fail("missing graph header");
    if (lines.back() != "}") return fail("missing closing brace");

    auto is_node_token = [](const std::string& tok) {
        if (tok.size() < 2 || tok[0] != 'c') return false;
        return std::all_of(tok.begin() + 1, tok.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };

    std::set<std::string> declared;
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.rfind("  ", 0) != 0) return fail("statement not indented: " + line);
        if (line.back() != ';') return fail("statement missing ';': " + line);
        std::string body = line.substr(2, line.size() - 3);
        if (body == "rankdir=BT" || body == "node [shape=box]") continue;

        std::size_t dash = body.find(" -- ");
        if (dash == std::string::npos) {
            // node statement: c<k> [label="..."]
            std::size_t space = body.find(' ');
            if (space == std::string::npos) return fail("bad node statement: " + line);
            std::string name = body.substr(0, space);
            std::string attrs = body.substr(space + 1);
            if (!is_node_token(name)) return fail("bad node name: " + line);
            if (attrs.rfind("[label=\"", 0) != 0 || attrs.back() != ']')
                return fail("bad node attributes: " + line);
            if (!declared.insert(name).second)
                return fail("node declared twice: " + line);
            ++audit.node_count;
            continue;
        }

        // edge statement: c<a> -- c<b> [attrs]?
        std::string left = body.substr(0, dash);
        std::string rest = body.substr(dash + 4);
        std::string right = rest;
        std::size_t space = rest.find(' ');
        if (space != std::string::npos) {
            right = rest.substr(0, space);
            std::string attrs = rest.substr(space + 1);
            if (attrs.front() != '[' || attrs.back() != ']')
                return fail("bad edge attributes: " + line);
        }
        if (!is_node_token(left) || !is_node_token(right))
            return fail("bad edge endpoints: " + line);
        if (!declared.count(left) || !declared.count(right))
            return fail("edge references undeclared node: " + line);
        ++audit.edge_count;
        if (line.find("color=red") != std::string::npos) ++audit.red_edge_count;
    }

    audit.well_formed = true;
    return audit;
}

} // namespace g2galois::oracle
