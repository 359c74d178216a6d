#include "g2galois/genus2.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2galois/errors.hpp"
#include "g2galois/fingerprint.hpp"

namespace g2galois {

const char* aut_group_name(AutGroupId id) {
    switch (id) {
        case AutGroupId::C2: return "C2";
        case AutGroupId::C2xC2: return "C2xC2";
        case AutGroupId::D4_8: return "D4";
        case AutGroupId::C10: return "C10";
        case AutGroupId::D6_12: return "D6";
        case AutGroupId::C3sdD4_24: return "C3sdD4";
        case AutGroupId::GL2F3_48: return "GL2F3";
    }
    throw std::invalid_argument("bad AutGroupId");
}

AutGroupId parse_aut_group(const std::string& name) {
    for (AutGroupId id : all_aut_groups)
        if (name == aut_group_name(id)) return id;
    if (name == "D4_8") return AutGroupId::D4_8;
    if (name == "D6_12") return AutGroupId::D6_12;
    if (name == "C3sdD4_24") return AutGroupId::C3sdD4_24;
    if (name == "GL2F3_48") return AutGroupId::GL2F3_48;
    throw std::invalid_argument("unknown group '" + name +
                                "' (expected one of C2, C2xC2, D4, C10, D6, "
                                "C3sdD4, GL2F3)");
}

std::string CurveContext::subgroup_ref(int lattice_index) const {
    return labels[lattice_index] + "#" + std::to_string(lattice_index);
}

int CurveContext::p1_node_of(int lattice_index) const {
    auto it = std::lower_bound(p1_nodes.begin(), p1_nodes.end(), lattice_index);
    if (it == p1_nodes.end() || *it != lattice_index) return -1;
    return static_cast<int>(it - p1_nodes.begin());
}

int hyperelliptic_involution(const FiniteGroup& g) {
    std::vector<int> central_involutions;
    for (int x = 1; x < g.order(); ++x) {
        if (g.mul(x, x) != 0) continue;
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y)
            central = g.mul(x, y) == g.mul(y, x);
        if (central) central_involutions.push_back(x);
    }
    if (central_involutions.size() != 1)
        throw AmbiguousSigma("group '" + g.name() + "' has " +
                             std::to_string(central_involutions.size()) +
                             " central involutions; expected exactly one");
    return central_involutions.front();
}

bool quotient_is_p1(const CurveContext& ctx, int lattice_index) {
    return ctx.lattice.subgroups[lattice_index].order >= 3 ||
           lattice_index == ctx.sigma_subgroup;
}

bool very_ample(const CurveContext& ctx, int p1_node) {
    return ctx.node_order(p1_node) >= 5;
}

std::vector<int> very_ample_orders(const CurveContext& ctx) {
    std::vector<int> orders;
    for (int n = 0; n < ctx.p1_count(); ++n) {
        int k = ctx.node_order(n);
        if (k >= 5 && (orders.empty() || orders.back() != k)) orders.push_back(k);
    }
    return orders; // p1 nodes are order-sorted, so this is ascending unique
}

CurveContext make_context(AutGroupId id, std::shared_ptr<const FiniteGroup> group,
                          int designated_sigma) {
    CurveContext ctx;
    ctx.id = id;
    ctx.name = aut_group_name(id);
    ctx.group = std::move(group);

    if (designated_sigma >= 0) {
        const FiniteGroup& g = *ctx.group;
        if (designated_sigma >= g.order() ||
            g.mul(designated_sigma, designated_sigma) != g.identity() ||
            designated_sigma == g.identity())
            throw std::invalid_argument("designated sigma is not an involution");
        for (int y = 0; y < g.order(); ++y)
            if (g.mul(designated_sigma, y) != g.mul(y, designated_sigma))
                throw std::invalid_argument("designated sigma is not central");
        ctx.sigma = designated_sigma;
    } else {
        ctx.sigma = hyperelliptic_involution(*ctx.group);
    }

    ctx.lattice = build_lattice(*ctx.group);
    ctx.labels.reserve(ctx.lattice.count());
    for (const Subgroup& s : ctx.lattice.subgroups)
        ctx.labels.push_back(iso_label(fingerprint(s)));

    std::uint64_t sigma_mask = (std::uint64_t{1} << ctx.group->identity()) |
                               (std::uint64_t{1} << ctx.sigma);
    for (int i = 0; i < ctx.lattice.count(); ++i)
        if (ctx.lattice.subgroups[i].members == sigma_mask) ctx.sigma_subgroup = i;
    if (ctx.sigma_subgroup < 0)
        throw std::logic_error("<sigma> missing from the subgroup lattice");

    for (int i = 0; i < ctx.lattice.count(); ++i)
        if (ctx.lattice.subgroups[i].order >= 3 || i == ctx.sigma_subgroup)
            ctx.p1_nodes.push_back(i);

    return ctx;
}

} // namespace g2galois
