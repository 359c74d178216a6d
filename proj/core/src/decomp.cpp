#include "g2galois/decomp.hpp"

#include <algorithm>
#include <string>

#include "g2galois/errors.hpp"

namespace g2galois {

namespace {

void require_very_ample(const CurveContext& ctx, int h_node) {
    if (!very_ample(ctx, h_node))
        throw NotVeryAmple("divisor induced by " + ctx.node_ref(h_node) +
                           " has degree " + std::to_string(ctx.node_order(h_node)) +
                           " < 5");
}

} // namespace

DecompositionReport decompose(const PicardLedger& led, int h_node) {
    const CurveContext& ctx = led.context();
    require_very_ample(ctx, h_node);

    DecompositionReport report;
    report.group_name = ctx.name;
    report.h_order = ctx.node_order(h_node);
    report.h_label = ctx.labels[ctx.p1_nodes[h_node]];
    report.h_index_within_order = 0;
    for (int i = 0; i < h_node; ++i)
        if (ctx.node_order(i) == report.h_order) ++report.h_index_within_order;

    for (int n = 0; n < ctx.p1_count(); ++n) {
        LSpace ls = ell(led, h_node, n);
        ComponentRecord rec;
        rec.n_node = n;
        rec.n_subgroup = ctx.p1_nodes[n];
        rec.n_label = ctx.node_ref(n);
        rec.n_order = ctx.node_order(n);
        rec.dimension = ls.value - 1;
        rec.certainty = ls.certainty;
        rec.certificate = std::move(ls.certificate);
        ++report.histogram[rec.dimension];
        report.components.push_back(std::move(rec));
    }
    return report;
}

DecompositionReport decompose_by_order(const PicardLedger& led, int order) {
    const CurveContext& ctx = led.context();
    std::vector<int> h_nodes;
    for (int h = 0; h < ctx.p1_count(); ++h)
        if (ctx.node_order(h) == order) h_nodes.push_back(h);
    if (h_nodes.empty() || order < 5)
        throw NotVeryAmple("no subgroup of " + ctx.name + " with order " +
                           std::to_string(order) +
                           " induces a very ample divisor");

    DecompositionReport merged = decompose(led, h_nodes[0]);
    std::vector<std::string> labels{merged.h_label};
    for (std::size_t i = 1; i < h_nodes.size(); ++i) {
        DecompositionReport next = decompose(led, h_nodes[i]);
        if (next.histogram != merged.histogram)
            throw NonUniform("subgroups " + ctx.node_ref(h_nodes[0]) + " and " +
                             ctx.node_ref(h_nodes[i]) +
                             " of order " + std::to_string(order) +
                             " decompose differently");
        if (std::find(labels.begin(), labels.end(), next.h_label) == labels.end())
            labels.push_back(next.h_label);
    }

    merged.h_index_within_order = -1;
    merged.h_label = labels[0];
    for (std::size_t i = 1; i < labels.size(); ++i)
        merged.h_label += "|" + labels[i];
    return merged;
}

PairDifferenceAudit verify_pairwise_differences(const PicardLedger& led) {
    const CurveContext& ctx = led.context();
    PairDifferenceAudit audit;
    if (ctx.id == AutGroupId::C10) {
        audit.skipped = true;
        audit.note =
            "the order-5 and order-10 divisor classes of C10 admit no "
            "derivable tie to the canonical class (every candidate mediator "
            "has odd order), so their pairwise differences rest on degree "
            "arithmetic alone";
        return audit;
    }

    for (int h = 0; h < ctx.p1_count(); ++h) {
        if (!very_ample(ctx, h)) continue;
        for (int n = 0; n < ctx.p1_count(); ++n) {
            if (n == h || !very_ample(ctx, n)) continue;
            ++audit.pairs_checked;
            int expected = (ctx.node_order(h) - ctx.node_order(n)) / 2;
            std::optional<int> diff = led.difference(h, n);
            if (!diff || *diff != expected) audit.failures.emplace_back(h, n);
        }
    }
    return audit;
}

DimensionZeroAudit verify_dimension_zero_count(const PicardLedger& led, int h_node) {
    const CurveContext& ctx = led.context();
    DecompositionReport report = decompose(led, h_node);

    DimensionZeroAudit audit;
    audit.h_node = h_node;
    auto it = report.histogram.find(0);
    audit.dimension_zero_count = it == report.histogram.end() ? 0 : it->second;
    for (int n = 0; n < ctx.p1_count(); ++n)
        if (ctx.node_order(n) == report.h_order) ++audit.same_order_count;
    audit.all_proved = true;
    for (const ComponentRecord& rec : report.components)
        if (rec.dimension == 0 && rec.certainty != Certainty::Proved)
            audit.all_proved = false;
    return audit;
}

} // namespace g2galois
