// command-line front end: catalog listing, subgroup lattices, locus
// decompositions, fixture verification, derivation certificates, and DOT
// lattice diagrams.
//
// exit codes: 0 success, 1 fixture mismatch or audit failure, 2 usage or
// input errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "g2galois/catalog.hpp"
#include "g2galois/decomp.hpp"
#include "g2galois/dot.hpp"
#include "g2galois/errors.hpp"
#include "g2galois/fixtures.hpp"
#include "g2galois/picard.hpp"
#include "g2galois/report.hpp"

namespace {

namespace fs = std::filesystem;
using namespace g2galois;

bool has_catalog(const std::string& dir) {
    return !dir.empty() && fs::exists(fs::path(dir) / "catalog.txt");
}

// --data-dir flag, then $G2GALOIS_DATA_DIR, then the source-tree data
// directory, then the installed one; the first that holds catalog.txt wins.
// an explicit flag that lacks catalog.txt is an error, not a fallthrough.
std::string resolve_data_dir(const std::string& flag) {
    if (!flag.empty()) {
        if (has_catalog(flag)) return flag;
        throw DataFormatError("no catalog.txt under --data-dir " + flag);
    }
    if (const char* env = std::getenv("G2GALOIS_DATA_DIR"))
        if (has_catalog(env)) return env;
#ifdef G2GALOIS_SOURCE_DATA_DIR
    if (has_catalog(G2GALOIS_SOURCE_DATA_DIR)) return G2GALOIS_SOURCE_DATA_DIR;
#endif
#ifdef G2GALOIS_INSTALL_DATA_DIR
    if (has_catalog(G2GALOIS_INSTALL_DATA_DIR)) return G2GALOIS_INSTALL_DATA_DIR;
#endif
    throw DataFormatError("no data directory with catalog.txt found; pass --data-dir");
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DataFormatError("cannot open output file " + out_path);
    out << payload;
}

const CurveContext& find_context(const std::vector<CurveContext>& contexts,
                                 const std::string& name) {
    AutGroupId id = parse_aut_group(name);
    for (const CurveContext& ctx : contexts)
        if (ctx.id == id) return ctx;
    throw std::invalid_argument("group " + name + " missing from catalog");
}

std::pair<int, int> parse_index_pair(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw std::invalid_argument("expected H:N subgroup indices, got \"" +
                                    text + "\"");
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    int a = 0;
    int b = 0;
    try {
        a = std::stoi(text.substr(0, colon), &used_a);
        b = std::stoi(text.substr(colon + 1), &used_b);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected H:N subgroup indices, got \"" +
                                    text + "\"");
    }
    if (used_a != colon || used_b != text.size() - colon - 1)
        throw std::invalid_argument("expected H:N subgroup indices, got \"" +
                                    text + "\"");
    return {a, b};
}

int require_p1_node(const CurveContext& ctx, int lattice_index) {
    if (lattice_index < 0 ||
        lattice_index >= static_cast<int>(ctx.lattice.subgroups.size()))
        throw std::invalid_argument("subgroup index " +
                                    std::to_string(lattice_index) +
                                    " out of range for " + ctx.name);
    int node = ctx.p1_node_of(lattice_index);
    if (node < 0)
        throw std::invalid_argument("subgroup " + ctx.subgroup_ref(lattice_index) +
                                    " of " + ctx.name +
                                    " does not induce a projective-line quotient");
    return node;
}

std::optional<FixtureTable> try_load_fixture(const std::string& data_dir,
                                             const CurveContext& ctx) {
    fs::path path = fs::path(data_dir) / fixture_filename(ctx.id);
    if (!fs::exists(path)) return std::nullopt;
    return load_fixture_file(path.string(), ctx.name);
}

std::vector<ErratumEntry> try_load_errata(const std::string& data_dir) {
    fs::path path = fs::path(data_dir) / "errata.csv";
    if (!fs::exists(path)) return {};
    return load_errata_file(path.string());
}

std::string empty_decomposition_message(const CurveContext& ctx) {
    return "empty decomposition: no subgroup of " + ctx.name +
           " induces a very ample divisor\n";
}

int cmd_list_groups(const std::vector<CurveContext>& contexts,
                    const std::string& out_path) {
    std::ostringstream out;
    for (const CurveContext& ctx : contexts) {
        out << ctx.name << ": order " << ctx.group->order() << ", "
            << ctx.lattice.subgroups.size() << " subgroups, " << ctx.p1_count()
            << " projective-line quotients, very ample orders:";
        std::vector<int> orders = very_ample_orders(ctx);
        if (orders.empty()) out << " none";
        for (int k : orders) out << " " << k;
        out << "\n";
    }
    emit(out_path, out.str());
    return 0;
}

int cmd_subgroups(const CurveContext& ctx, const std::string& out_path) {
    std::ostringstream out;
    out << ctx.name << ": " << ctx.lattice.subgroups.size() << " subgroups\n";
    const std::vector<std::string> element_names = ctx.group->element_labels();
    for (std::size_t i = 0; i < ctx.lattice.subgroups.size(); ++i) {
        const Subgroup& s = ctx.lattice.subgroups[i];
        int class_id = ctx.lattice.conjugacy_class[i];
        out << ctx.subgroup_ref(static_cast<int>(i)) << "  order=" << s.order
            << "  class_size=" << ctx.lattice.class_size[class_id]
            << "  normal=" << (ctx.lattice.normal[i] ? "yes" : "no")
            << "  p1=" << (ctx.p1_node_of(static_cast<int>(i)) >= 0 ? "yes" : "no")
            << "  elements:";
        for (int e : s.element_list()) out << " " << element_names[e];
        out << "\n";
    }
    emit(out_path, out.str());
    return 0;
}

int cmd_decompose(const CurveContext& ctx, int order, int subgroup_index,
                  const std::string& format_text, const std::string& data_dir,
                  const std::string& out_path) {
    RenderFormat format = parse_format(format_text);
    std::optional<FixtureTable> fixture = try_load_fixture(data_dir, ctx);
    const std::vector<int>* columns = fixture ? &fixture->columns : nullptr;
    PicardLedger led = build_ledger(ctx);

    if (subgroup_index >= 0) {
        int h_node = require_p1_node(ctx, subgroup_index);
        emit(out_path, render(ctx, decompose(led, h_node), format, columns));
        return 0;
    }
    if (order >= 0) {
        emit(out_path, render(ctx, decompose_by_order(led, order), format, columns));
        return 0;
    }

    std::vector<int> orders = very_ample_orders(ctx);
    if (orders.empty()) {
        emit(out_path, empty_decomposition_message(ctx));
        return 0;
    }
    std::vector<DecompositionReport> rows;
    rows.reserve(orders.size());
    for (int k : orders) rows.push_back(decompose_by_order(led, k));
    emit(out_path, render_table(ctx, rows, format, columns));
    return 0;
}

int verify_one(const CurveContext& ctx, const std::string& data_dir,
               std::ostringstream& out) {
    int status = 0;
    PicardLedger led = build_ledger(ctx);
    out << "== " << ctx.name << " ==\n";
    out << "relations: " << led.relation_count() << " (fired " << led.fired_count()
        << ", pending " << led.pending_count() << ")\n";
    out << "fired mediator orders:";
    std::vector<std::pair<int, int>> mediators = led.fired_mediator_orders();
    if (mediators.empty()) out << " none";
    for (const auto& [order, count] : mediators)
        out << " " << order << ":" << count;
    out << "\n";

    PairDifferenceAudit pair_audit = verify_pairwise_differences(led);
    if (pair_audit.skipped) {
        out << "pair-difference audit: skipped (" << pair_audit.note << ")\n";
    } else {
        out << "pair-difference audit: " << pair_audit.pairs_checked << " pairs, ";
        if (pair_audit.passed()) {
            out << "all differences derived\n";
        } else {
            status = 1;
            out << pair_audit.failures.size() << " FAILED:";
            for (const auto& [h, n] : pair_audit.failures)
                out << " (" << ctx.node_ref(h) << "," << ctx.node_ref(n) << ")";
            out << "\n";
        }
    }

    std::vector<int> orders = very_ample_orders(ctx);
    bool dz_all = true;
    for (int h = 0; h < ctx.p1_count(); ++h) {
        if (!very_ample(ctx, h)) continue;
        DimensionZeroAudit dz = verify_dimension_zero_count(led, h);
        if (!dz.passed()) {
            dz_all = false;
            status = 1;
            out << "dimension-zero audit FAILED for " << ctx.node_ref(h) << ": "
                << dz.dimension_zero_count << " zero-dimensional vs "
                << dz.same_order_count << " same-order subgroups, all_proved="
                << (dz.all_proved ? "yes" : "no") << "\n";
        }
    }
    if (dz_all)
        out << "dimension-zero audit: all very ample subgroups pass\n";

    if (orders.empty()) {
        out << empty_decomposition_message(ctx);
        return status;
    }

    std::optional<FixtureTable> fixture = try_load_fixture(data_dir, ctx);
    if (!fixture) {
        out << "fixture: none shipped for " << ctx.name << "\n";
        return status;
    }
    std::vector<ErratumEntry> errata = try_load_errata(data_dir);
    std::vector<DecompositionReport> rows;
    for (int k : orders) rows.push_back(decompose_by_order(led, k));
    FixtureDiff diff = diff_against_fixture(rows, *fixture, errata);
    out << render_diff(diff, *fixture, errata);
    if (!diff.clean()) status = 1;
    return status;
}

int cmd_verify(const std::vector<CurveContext>& contexts, const std::string& group,
               bool all, const std::string& data_dir, const std::string& out_path) {
    std::ostringstream out;
    int status = 0;
    if (!all && !group.empty()) {
        status = verify_one(find_context(contexts, group), data_dir, out);
    } else {
        for (const CurveContext& ctx : contexts)
            status = std::max(status, verify_one(ctx, data_dir, out));
    }
    out << (status == 0 ? "verify: OK\n" : "verify: FAILED\n");
    emit(out_path, out.str());
    return status;
}

int cmd_certificate(const CurveContext& ctx, const std::string& pair_text,
                    const std::string& out_path) {
    auto [h_index, n_index] = parse_index_pair(pair_text);
    int h_node = require_p1_node(ctx, h_index);
    int n_node = require_p1_node(ctx, n_index);
    PicardLedger led = build_ledger(ctx);

    std::ostringstream out;
    try {
        std::vector<ZigzagStep> chain = led.zigzag(h_node, n_node);
        out << "certificate " << ctx.node_ref(h_node) << " -> "
            << ctx.node_ref(n_node) << " (" << chain.size() << " steps)\n";
        if (!chain.empty()) out << render_certificate(ctx, chain) << "\n";
        int total = 0;
        for (const ZigzagStep& s : chain) total += s.k_delta;
        out << "total: D(" << ctx.node_ref(h_node) << ") - D("
            << ctx.node_ref(n_node) << ") ~ " << total << "*K\n";
    } catch (const NoPath& e) {
        // a derivable "no chain exists" is a computed answer, not a failure
        out << e.what() << "\n";
    }
    emit(out_path, out.str());
    return 0;
}

int cmd_lattice_dot(const CurveContext& ctx, const std::string& highlight,
                    const std::string& out_path) {
    std::string payload;
    if (highlight.empty()) {
        payload = render_lattice_dot(ctx);
    } else {
        auto [h_index, n_index] = parse_index_pair(highlight);
        int h_node = require_p1_node(ctx, h_index);
        int n_node = require_p1_node(ctx, n_index);
        PicardLedger led = build_ledger(ctx);
        payload = render_lattice_dot(ctx, led, h_node, n_node);
    }
    emit(out_path, payload);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"genus-2 Galois subspace decomposition toolkit"};
    app.require_subcommand(1);

    std::string data_dir;
    std::string group;
    std::string format = "md";
    std::string out_path;
    std::string highlight;
    std::string pair_text;
    int order = -1;
    int subgroup_index = -1;
    bool all = false;

    auto add_common = [&](CLI::App* sub, bool needs_group) {
        sub->add_option("--data-dir", data_dir,
                        "directory holding catalog.txt and the fixture tables");
        sub->add_option("--out", out_path, "write output to this file");
        if (needs_group)
            sub->add_option("--group", group, "automorphism group name")->required();
    };

    CLI::App* sc_list = app.add_subcommand("list-groups", "list the catalog");
    add_common(sc_list, false);

    CLI::App* sc_sub = app.add_subcommand("subgroups", "list the subgroup lattice");
    add_common(sc_sub, true);

    CLI::App* sc_dec = app.add_subcommand(
        "decompose", "decompose the Galois-subspace locus into components");
    add_common(sc_dec, true);
    CLI::Option* opt_order =
        sc_dec->add_option("--order", order, "restrict to subgroups of this order");
    CLI::Option* opt_index = sc_dec->add_option(
        "--subgroup-index", subgroup_index, "restrict to one subgroup (lattice index)");
    opt_order->excludes(opt_index);
    sc_dec->add_option("--format", format, "md, csv, or json");

    CLI::App* sc_ver = app.add_subcommand(
        "verify", "audit the derivations and compare against the shipped tables");
    add_common(sc_ver, false);
    CLI::Option* opt_vgroup =
        sc_ver->add_option("--group", group, "verify one group");
    sc_ver->add_flag("--all", all, "verify every catalog group")->excludes(opt_vgroup);

    CLI::App* sc_cert = app.add_subcommand(
        "certificate", "print the derivation chain joining two divisor classes");
    add_common(sc_cert, true);
    sc_cert->add_option("--pair", pair_text, "H:N subgroup lattice indices")
        ->required();

    CLI::App* sc_dot = app.add_subcommand(
        "lattice-dot", "emit the subgroup lattice as a DOT graph");
    add_common(sc_dot, true);
    sc_dot->add_option("--highlight", highlight,
                       "H:N subgroup lattice indices whose derivation chain to mark");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string resolved = resolve_data_dir(data_dir);
        std::vector<CurveContext> contexts =
            load_catalog((fs::path(resolved) / "catalog.txt").string());

        if (app.got_subcommand(sc_list))
            return cmd_list_groups(contexts, out_path);
        if (app.got_subcommand(sc_sub))
            return cmd_subgroups(find_context(contexts, group), out_path);
        if (app.got_subcommand(sc_dec))
            return cmd_decompose(find_context(contexts, group), order,
                                 subgroup_index, format, resolved, out_path);
        if (app.got_subcommand(sc_ver))
            return cmd_verify(contexts, group, all, resolved, out_path);
        if (app.got_subcommand(sc_cert))
            return cmd_certificate(find_context(contexts, group), pair_text, out_path);
        if (app.got_subcommand(sc_dot))
            return cmd_lattice_dot(find_context(contexts, group), highlight, out_path);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
