#include "g2galois/picard.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "g2galois/errors.hpp"

namespace g2galois {

const char* certainty_name(Certainty c) {
    switch (c) {
        case Certainty::Proved: return "Proved";
        case Certainty::AssumedDistinct: return "AssumedDistinct";
        case Certainty::Undecided: return "Undecided";
    }
    throw std::invalid_argument("bad Certainty");
}

std::vector<Relation> collect_relations(const CurveContext& ctx) {
    const int m = ctx.p1_count();
    std::vector<Relation> rels;
    rels.push_back(RelAnchor{ctx.p1_node_of(ctx.sigma_subgroup)});

    auto mask = [&](int node) { return ctx.node_subgroup(node).members; };

    for (int h = 0; h < m; ++h)
        for (int n = h + 1; n < m; ++n) {
            if (ctx.node_order(h) != ctx.node_order(n)) continue;
            std::uint64_t common = mask(h) & mask(n);
            for (int via = 0; via < m; ++via)
                if ((mask(via) & common) == mask(via))
                    rels.push_back(RelEqualVia{h, n, via});
        }

    for (int h = 0; h < m; ++h)
        for (int n = 0; n < m; ++n) {
            int d = ctx.node_order(h) - ctx.node_order(n);
            if (d <= 0) continue;
            std::uint64_t common = mask(h) & mask(n);
            for (int via = 0; via < m; ++via)
                if (ctx.node_order(via) == d && (mask(via) & common) == mask(via))
                    rels.push_back(RelDiffIsClass{h, n, via});
        }

    return rels;
}

PicardLedger::PicardLedger(const CurveContext& ctx,
                           const std::vector<Relation>& relations)
    : ctx_(&ctx), anchor_(ctx.p1_count()), relations_(relations) {
    const int m = anchor_;
    parent_.resize(m + 1);
    offset_.assign(m + 1, 0);
    for (int i = 0; i <= m; ++i) parent_[i] = i;
    adj_.resize(m + 1);

    auto check_node = [&](int v) {
        if (v < 0 || v >= m)
            throw std::invalid_argument("relation references bad node " +
                                        std::to_string(v));
    };

    // anchors and equalities first, in input order
    std::vector<int> pending;
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        const Relation& r = relations_[i];
        int ri = static_cast<int>(i);
        if (const auto* a = std::get_if<RelAnchor>(&r)) {
            check_node(a->sigma_node);
            merge(a->sigma_node, anchor_, 0, ri);
            ++fired_;
        } else if (const auto* eq = std::get_if<RelEqualVia>(&r)) {
            check_node(eq->h);
            check_node(eq->n);
            check_node(eq->via);
            merge(eq->h, eq->n, 0, ri);
            ++fired_;
        } else {
            const auto& df = std::get<RelDiffIsClass>(r);
            check_node(df.h);
            check_node(df.n);
            check_node(df.via);
            pending.push_back(ri);
        }
    }

    // worklist: a difference relation fires once its mediator has a known
    // absolute class. passes repeat until a full pass fires nothing.
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<int> still_pending;
        for (int ri : pending) {
            const auto& df = std::get<RelDiffIsClass>(relations_[ri]);
            if (find(df.via) != find(anchor_)) {
                still_pending.push_back(ri);
                continue;
            }
            int m_l = 1 + potential(df.via) - potential(anchor_);
            merge(df.h, df.n, m_l, ri);
            fired_mediators_.emplace_back(ctx_->node_order(df.via), df.via);
            ++fired_;
            progress = true;
        }
        pending.swap(still_pending);
    }
    pending_ = static_cast<int>(pending.size());

    // derivation graph adjacency in deterministic order
    for (auto& edges : adj_)
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return a.to != b.to ? a.to < b.to : a.rel_index < b.rel_index;
        });

    // degree consistency: an anchored node's class is |H|/2 multiples
    for (int v = 0; v < m; ++v) {
        if (find(v) != find(anchor_)) continue;
        int absolute = 1 + potential(v) - potential(anchor_);
        if (2 * absolute != ctx_->node_order(v))
            throw InconsistentLedger(
                "node " + ctx_->node_ref(v) + " anchored at " +
                std::to_string(absolute) + " canonical multiples but has order " +
                std::to_string(ctx_->node_order(v)));
    }
}

int PicardLedger::find(int x) const {
    if (parent_[x] == x) return x;
    int root = find(parent_[x]);
    offset_[x] += offset_[parent_[x]];
    parent_[x] = root;
    return root;
}

int PicardLedger::potential(int x) const {
    find(x);
    return parent_[x] == x ? 0 : offset_[x];
}

void PicardLedger::merge(int a, int b, int delta, int rel_index) {
    // class(a) - class(b) = delta canonical multiples
    int ra = find(a);
    int rb = find(b);
    int pa = potential(a);
    int pb = potential(b);
    if (ra == rb) {
        if (pa - pb != delta)
            throw InconsistentLedger(
                "relation " + std::to_string(rel_index) + " implies offset " +
                std::to_string(delta) + " but ledger holds " +
                std::to_string(pa - pb));
        add_edge(a, b, delta, rel_index);
        return;
    }
    parent_[ra] = rb;
    offset_[ra] = delta + pb - pa;
    add_edge(a, b, delta, rel_index);
}

void PicardLedger::add_edge(int a, int b, int delta, int rel_index) {
    adj_[a].push_back(Edge{b, delta, rel_index});
    adj_[b].push_back(Edge{a, -delta, rel_index});
}

bool PicardLedger::anchored(int node) const {
    return find(node) == find(anchor_);
}

std::optional<int> PicardLedger::absolute(int node) const {
    if (!anchored(node)) return std::nullopt;
    return 1 + potential(node) - potential(anchor_);
}

std::optional<int> PicardLedger::difference(int h, int n) const {
    if (find(h) != find(n)) return std::nullopt;
    return potential(h) - potential(n);
}

std::vector<ZigzagStep> PicardLedger::zigzag(int h, int n) const {
    if (h == n) return {};
    const int nodes = anchor_ + 1;
    std::vector<int> prev(nodes, -1);
    std::vector<int> prev_edge(nodes, -1);
    std::vector<bool> seen(nodes, false);
    std::vector<int> queue{h};
    seen[h] = true;
    for (std::size_t head = 0; head < queue.size() && !seen[n]; ++head) {
        int x = queue[head];
        for (std::size_t ei = 0; ei < adj_[x].size(); ++ei) {
            const Edge& e = adj_[x][ei];
            if (seen[e.to]) continue;
            seen[e.to] = true;
            prev[e.to] = x;
            prev_edge[e.to] = static_cast<int>(ei);
            queue.push_back(e.to);
            if (e.to == n) break;
        }
    }
    if (!seen[n])
        throw NoPath("no derivation chain joins " + ctx_->node_ref(h) + " and " +
                     ctx_->node_ref(n));

    std::vector<ZigzagStep> chain;
    for (int x = n; x != h; x = prev[x]) {
        const Edge& e = adj_[prev[x]][prev_edge[x]];
        ZigzagStep s;
        s.from = prev[x];
        s.to = x;
        s.k_delta = e.delta;
        s.rel = relations_[e.rel_index];
        chain.push_back(s);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<std::pair<int, int>> PicardLedger::fired_mediator_orders() const {
    std::map<int, int> hist;
    for (const auto& fired : fired_mediators_) ++hist[fired.first];
    return {hist.begin(), hist.end()};
}

PicardLedger build_ledger(const CurveContext& ctx) {
    return PicardLedger(ctx, collect_relations(ctx));
}

PicardLedger build_ledger(const CurveContext& ctx,
                          const std::vector<Relation>& relations) {
    return PicardLedger(ctx, relations);
}

LSpace ell(const PicardLedger& led, int h, int n) {
    const CurveContext& ctx = led.context();
    int d = ctx.node_order(h) - ctx.node_order(n);

    if (d < 0) return {0, Certainty::Proved, {}};

    if (d == 0) {
        if (h == n) return {1, Certainty::Proved, {}};
        std::optional<int> diff = led.difference(h, n);
        if (!diff) return {0, Certainty::AssumedDistinct, {}};
        // equal-degree classes: sections exist exactly when the classes agree
        return {*diff == 0 ? 1 : 0, Certainty::Proved, led.zigzag(h, n)};
    }

    if (d == 1) return {0, Certainty::Undecided, {}};

    if (d == 2) {
        std::optional<int> diff = led.difference(h, n);
        if (!diff) return {1, Certainty::AssumedDistinct, {}};
        // a degree-2 class has two sections exactly when it is canonical
        return {*diff == 1 ? 2 : 1, Certainty::Proved, led.zigzag(h, n)};
    }

    return {d - 1, Certainty::Proved, {}};
}

} // namespace g2galois
