#include "g2galois/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "g2galois/errors.hpp"

namespace g2galois {

namespace {

// node reference that tolerates the virtual canonical-class node
std::string node_or_k(const CurveContext& ctx, int node) {
    return node == ctx.p1_count() ? std::string("K") : ctx.node_ref(node);
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// column template merged with every dimension the reports use, truncated
// after the last column some report actually fills
std::vector<int> plan_columns(const std::vector<DecompositionReport>& reports,
                              const std::vector<int>* column_template) {
    std::set<int> merged;
    if (column_template) merged.insert(column_template->begin(), column_template->end());
    int last_used = 0;
    bool any = false;
    for (const DecompositionReport& r : reports)
        for (const auto& [dim, count] : r.histogram)
            if (count != 0) {
                merged.insert(dim);
                last_used = any ? std::max(last_used, dim) : dim;
                any = true;
            }
    std::vector<int> columns;
    for (int dim : merged)
        if (!any || dim <= last_used) columns.push_back(dim);
    return columns;
}

long long histogram_cell(const DecompositionReport& r, int dim) {
    auto it = r.histogram.find(dim);
    return it == r.histogram.end() ? 0 : it->second;
}

std::string csv_table(const std::vector<DecompositionReport>& reports,
                      const std::vector<int>& columns) {
    std::ostringstream out;
    out << "H";
    for (int dim : columns) out << ",n:" << dim;
    out << "\n";
    for (const DecompositionReport& r : reports) {
        out << r.h_order;
        for (int dim : columns) out << "," << histogram_cell(r, dim);
        out << "\n";
    }
    return out.str();
}

std::string markdown_table(const std::vector<DecompositionReport>& reports,
                           const std::vector<int>& columns) {
    std::ostringstream out;
    out << "|H|";
    for (int dim : columns) out << " | D_" << dim;
    out << "\n---";
    for (std::size_t i = 0; i < columns.size(); ++i) out << " | ---";
    out << "\n";
    for (const DecompositionReport& r : reports) {
        out << r.h_order;
        for (int dim : columns) out << " | " << histogram_cell(r, dim);
        out << "\n";
    }
    return out.str();
}

std::string json_report(const CurveContext& ctx, const DecompositionReport& r) {
    std::ostringstream out;
    out << "{\"group\":\"" << json_escape(r.group_name) << "\""
        << ",\"order_of_H\":" << r.h_order << ",\"components\":[";
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const ComponentRecord& c = r.components[i];
        if (i) out << ",";
        out << "{\"N_label\":\"" << json_escape(c.n_label) << "\""
            << ",\"N_order\":" << c.n_order
            << ",\"dimension\":" << c.dimension
            << ",\"certainty\":\"" << certainty_name(c.certainty) << "\""
            << ",\"certificate\":[";
        for (std::size_t s = 0; s < c.certificate.size(); ++s) {
            if (s) out << ",";
            out << "\"" << json_escape(render_step(ctx, c.certificate[s])) << "\"";
        }
        out << "]}";
    }
    out << "],\"histogram\":{";
    bool first = true;
    for (const auto& [dim, count] : r.histogram) {
        if (!first) out << ",";
        first = false;
        out << "\"" << dim << "\":" << count;
    }
    out << "}}";
    return out.str();
}

std::string component_detail(const DecompositionReport& r) {
    std::ostringstream out;
    out << "N | order | dim | certainty\n--- | --- | --- | ---\n";
    for (const ComponentRecord& c : r.components)
        out << c.n_label << " | " << c.n_order << " | " << c.dimension << " | "
            << certainty_name(c.certainty) << "\n";
    return out.str();
}

} // namespace

RenderFormat parse_format(const std::string& text) {
    if (text == "md" || text == "markdown") return RenderFormat::markdown;
    if (text == "csv") return RenderFormat::csv;
    if (text == "json") return RenderFormat::json;
    throw std::invalid_argument("unknown format \"" + text +
                                "\" (expected md, csv, or json)");
}

std::string render_step(const CurveContext& ctx, const ZigzagStep& s) {
    std::string head = node_or_k(ctx, s.from) + " => " + node_or_k(ctx, s.to) + " : ";
    if (const auto* a = std::get_if<RelAnchor>(&s.rel))
        return head + "D(" + node_or_k(ctx, a->sigma_node) + ") ~ K";
    if (const auto* eq = std::get_if<RelEqualVia>(&s.rel))
        return head + "D(" + node_or_k(ctx, s.from) + ") ~ D(" +
               node_or_k(ctx, s.to) + ") [shared " + node_or_k(ctx, eq->via) + "]";
    const auto& df = std::get<RelDiffIsClass>(s.rel);
    return head + "D(" + node_or_k(ctx, df.h) + ") - D(" + node_or_k(ctx, df.n) +
           ") ~ D(" + node_or_k(ctx, df.via) + ") ~ " +
           std::to_string(ctx.node_order(df.via) / 2) + "*K";
}

std::string render_certificate(const CurveContext& ctx,
                               const std::vector<ZigzagStep>& chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += "\n";
        out += render_step(ctx, chain[i]);
    }
    return out;
}

std::string render(const CurveContext& ctx, const DecompositionReport& report,
                   RenderFormat format, const std::vector<int>* column_template) {
    std::vector<DecompositionReport> one{report};
    std::vector<int> columns = plan_columns(one, column_template);
    switch (format) {
        case RenderFormat::csv:
            return csv_table(one, columns);
        case RenderFormat::json:
            return json_report(ctx, report);
        case RenderFormat::markdown: {
            std::ostringstream out;
            out << "# " << report.group_name << " decomposition for |H| = "
                << report.h_order << " (" << report.h_label << ")\n\n";
            out << markdown_table(one, columns) << "\n";
            out << component_detail(report);
            return out.str();
        }
    }
    throw std::invalid_argument("bad RenderFormat");
}

std::string render_table(const CurveContext& ctx,
                         const std::vector<DecompositionReport>& rows,
                         RenderFormat format,
                         const std::vector<int>* column_template) {
    std::vector<int> columns = plan_columns(rows, column_template);
    switch (format) {
        case RenderFormat::csv:
            return csv_table(rows, columns);
        case RenderFormat::markdown:
            return markdown_table(rows, columns);
        case RenderFormat::json: {
            std::string out = "[";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i) out += ",";
                out += json_report(ctx, rows[i]);
            }
            return out + "]";
        }
    }
    throw std::invalid_argument("bad RenderFormat");
}

const char* cell_status_name(CellStatus s) {
    switch (s) {
        case CellStatus::Match: return "Match";
        case CellStatus::KnownErratum: return "KnownErratum";
        case CellStatus::Mismatch: return "Mismatch";
    }
    throw std::invalid_argument("bad CellStatus");
}

FixtureDiff diff_against_fixture(const std::vector<DecompositionReport>& computed_rows,
                                 const FixtureTable& fixture,
                                 const std::vector<ErratumEntry>& errata) {
    FixtureDiff diff;
    std::vector<bool> entry_applied(errata.size(), false);

    for (const FixtureTable::Row& frow : fixture.rows) {
        const DecompositionReport* computed = nullptr;
        for (const DecompositionReport& r : computed_rows)
            if (r.h_order == frow.h_order) {
                computed = &r;
                break;
            }
        if (!computed)
            throw std::invalid_argument("no computed row for order " +
                                        std::to_string(frow.h_order));
        if (computed->group_name != fixture.group_name)
            throw std::invalid_argument("group mismatch: computed " +
                                        computed->group_name + " vs fixture " +
                                        fixture.group_name);

        std::set<int> dims(fixture.columns.begin(), fixture.columns.end());
        for (const auto& kv : computed->histogram) dims.insert(kv.first);

        for (int n : dims) {
            auto fit = frow.counts.find(n);
            long long raw = fit == frow.counts.end() ? 0 : fit->second;
            long long adjusted = raw;
            for (std::size_t ei = 0; ei < errata.size(); ++ei) {
                const ErratumEntry& e = errata[ei];
                if (e.group_name != fixture.group_name || e.h_order != frow.h_order)
                    continue;
                if (n == e.fixture_n) adjusted -= e.fixture_count;
                if (n == e.derived_n) adjusted += e.derived_count;
            }
            long long actual = histogram_cell(*computed, n);

            ++diff.cells_compared;
            CellStatus status;
            if (actual == raw) {
                status = CellStatus::Match;
            } else if (actual == adjusted) {
                status = CellStatus::KnownErratum;
                for (std::size_t ei = 0; ei < errata.size(); ++ei) {
                    const ErratumEntry& e = errata[ei];
                    if (e.group_name == fixture.group_name &&
                        e.h_order == frow.h_order &&
                        (n == e.fixture_n || n == e.derived_n))
                        entry_applied[ei] = true;
                }
            } else {
                status = CellStatus::Mismatch;
                ++diff.mismatch_count;
            }
            if (status != CellStatus::Match)
                diff.cells.push_back(CellDiff{frow.h_order, n, raw, actual, status});
        }
    }

    for (bool applied : entry_applied)
        if (applied) ++diff.errata_applied;
    return diff;
}

std::string render_diff(const FixtureDiff& diff, const FixtureTable& fixture,
                        const std::vector<ErratumEntry>& errata) {
    std::ostringstream out;
    out << "fixture " << fixture.group_name << ": " << diff.cells_compared
        << " cells compared\n";
    for (const FixtureTable::Row& frow : fixture.rows) {
        out << "  |H| = " << frow.h_order << ":";
        bool any = false;
        for (const CellDiff& cell : diff.cells) {
            if (cell.h_order != frow.h_order) continue;
            if (any) out << ";";
            any = true;
            out << " " << cell_status_name(cell.status) << " at n=" << cell.n
                << " (fixture " << cell.expected << ", computed " << cell.actual
                << ")";
        }
        if (!any) out << " all cells match";
        out << "\n";
    }
    for (const ErratumEntry& e : errata)
        if (e.group_name == fixture.group_name)
            out << "  note (|H| = " << e.h_order << "): " << e.note << "\n";
    if (diff.clean())
        out << "verdict: clean (" << diff.errata_applied << " errata applied)\n";
    else
        out << "verdict: mismatch (" << diff.mismatch_count << " cells)\n";
    return out.str();
}

} // namespace g2galois
