#include "g2galois/dot.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace g2galois {

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

int node_class(const CurveContext& ctx, int p1_node) {
    return ctx.lattice.conjugacy_class[ctx.p1_nodes[p1_node]];
}

std::set<EdgeKey> projected_cover_edges(const CurveContext& ctx) {
    std::set<EdgeKey> edges;
    for (const auto& [small, large] : ctx.lattice.cover_edges) {
        int ca = ctx.lattice.conjugacy_class[small];
        int cb = ctx.lattice.conjugacy_class[large];
        if (ca != cb) edges.insert(edge_key(ca, cb));
    }
    return edges;
}

// the red overlay: for each chain step joining H and N through mediator L,
// the segments H--L and L--N
std::set<EdgeKey> chain_edges(const CurveContext& ctx,
                              const std::vector<ZigzagStep>& chain) {
    std::set<EdgeKey> edges;
    auto add = [&](int a_node, int b_node) {
        int ca = node_class(ctx, a_node);
        int cb = node_class(ctx, b_node);
        if (ca != cb) edges.insert(edge_key(ca, cb));
    };
    for (const ZigzagStep& s : chain) {
        if (const auto* eq = std::get_if<RelEqualVia>(&s.rel)) {
            add(eq->h, eq->via);
            add(eq->via, eq->n);
        } else if (const auto* df = std::get_if<RelDiffIsClass>(&s.rel)) {
            add(df->h, df->via);
            add(df->via, df->n);
        }
    }
    return edges;
}

std::string render(const CurveContext& ctx, const std::set<EdgeKey>& highlight) {
    const SubgroupLattice& lat = ctx.lattice;
    std::ostringstream out;
    out << "graph lattice_" << ctx.name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";

    for (int k = 0; k < lat.class_count; ++k) {
        int rep = -1;
        for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
            if (lat.conjugacy_class[i] == k) {
                rep = static_cast<int>(i);
                break;
            }
        out << "  c" << k << " [label=\"" << ctx.labels[rep];
        if (lat.class_size[k] > 1) out << " (x" << lat.class_size[k] << ")";
        out << "\"];\n";
    }

    std::set<EdgeKey> base = projected_cover_edges(ctx);
    for (const EdgeKey& e : base) {
        out << "  c" << e.first << " -- c" << e.second;
        if (highlight.count(e)) out << " [color=red, penwidth=2.0]";
        out << ";\n";
    }
    for (const EdgeKey& e : highlight)
        if (!base.count(e))
            out << "  c" << e.first << " -- c" << e.second
                << " [color=red, penwidth=2.0, style=dashed];\n";

    out << "}\n";
    return out.str();
}

} // namespace

std::string render_lattice_dot(const CurveContext& ctx) {
    return render(ctx, {});
}

std::string render_lattice_dot(const CurveContext& ctx, const PicardLedger& led,
                               int h_node, int n_node) {
    return render(ctx, chain_edges(ctx, led.zigzag(h_node, n_node)));
}

} // namespace g2galois
