#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "g2galois/catalog.hpp"
#include "g2galois/errors.hpp"
#include "g2galois/report.hpp"

using namespace g2galois;

namespace {

std::string data_path(const std::string& file) {
    return std::string(G2GALOIS_DATA_DIR) + "/" + file;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::vector<CurveContext>& contexts() {
    static const std::vector<CurveContext> all =
        load_catalog(data_path("catalog.txt"));
    return all;
}

const CurveContext& context_named(const std::string& name) {
    for (const CurveContext& c : contexts())
        if (c.name == name) return c;
    throw std::logic_error("no context " + name);
}

const PicardLedger& ledger_named(const std::string& name) {
    static std::map<std::string, PicardLedger> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, build_ledger(context_named(name))).first;
    return it->second;
}

std::vector<DecompositionReport> all_order_rows(const std::string& name) {
    const CurveContext& ctx = context_named(name);
    const PicardLedger& led = ledger_named(name);
    std::vector<DecompositionReport> rows;
    for (int order : very_ample_orders(ctx))
        rows.push_back(decompose_by_order(led, order));
    return rows;
}

} // namespace

TEST_CASE("markdown report for the order-8 dihedral group") {
    const CurveContext& ctx = context_named("D4");
    DecompositionReport rep = decompose_by_order(ledger_named("D4"), 8);
    std::string md = render(ctx, rep, RenderFormat::markdown);

    CHECK(md.find("# D4 decomposition for |H| = 8 (D4)") != std::string::npos);
    CHECK(md.find("|H| | D_0 | D_2 | D_4") != std::string::npos);
    CHECK(md.find("8 | 1 | 3 | 1") != std::string::npos);
    CHECK(md.find("N | order | dim | certainty") != std::string::npos);
    CHECK(md.find("Proved") != std::string::npos);

    // byte determinism
    CHECK(md == render(ctx, rep, RenderFormat::markdown));
}

TEST_CASE("column planning merges the template and truncates trailing zeros") {
    const CurveContext& ctx = context_named("GL2F3");
    FixtureTable fixture =
        load_fixture_file(data_path("table_GL2F3.csv"), "GL2F3");
    DecompositionReport rep = decompose_by_order(ledger_named("GL2F3"), 16);

    std::string csv = render(ctx, rep, RenderFormat::csv, &fixture.columns);
    CHECK(csv ==
          "H,n:-1,n:0,n:1,n:2,n:3,n:4,n:5,n:6,n:7,n:8,n:10,n:11,n:12\n"
          "16,2,3,0,4,0,0,0,7,0,12,9,4,1\n");
}

TEST_CASE("the rendered full table reproduces the shipped reference bytes") {
    for (const char* name : {"GL2F3", "D6"}) {
        const CurveContext& ctx = context_named(name);
        FixtureTable fixture = load_fixture_file(
            data_path(fixture_filename(ctx.id)), name);
        std::string csv = render_table(ctx, all_order_rows(name),
                                       RenderFormat::csv, &fixture.columns);
        CHECK(csv == slurp(data_path(fixture_filename(ctx.id))));
    }
}

TEST_CASE("json reports carry the full component detail") {
    const CurveContext& ctx = context_named("D4");
    DecompositionReport rep = decompose_by_order(ledger_named("D4"), 8);
    std::string text = render(ctx, rep, RenderFormat::json);

    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["group"] == "D4");
    CHECK(j["order_of_H"] == 8);
    REQUIRE(j["components"].is_array());
    CHECK(j["components"].size() == 5);
    for (const auto& c : j["components"]) {
        CHECK(c.contains("N_label"));
        CHECK(c.contains("N_order"));
        CHECK(c.contains("dimension"));
        CHECK(c["certainty"] == "Proved");
        CHECK(c["certificate"].is_array());
    }
    CHECK(j["histogram"]["0"] == 1);
    CHECK(j["histogram"]["2"] == 3);
    CHECK(j["histogram"]["4"] == 1);

    // a table render is a json array of the same objects
    nlohmann::json arr = nlohmann::json::parse(
        render_table(ctx, all_order_rows("D4"), RenderFormat::json));
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 1);
    CHECK(arr[0]["group"] == "D4");
}

TEST_CASE("derivation steps render with their rule shapes") {
    const CurveContext& d4 = context_named("D4");
    const PicardLedger& d4led = ledger_named("D4");
    int sigma = d4.p1_node_of(d4.sigma_subgroup);
    int four = -1;
    for (int n = 0; n < d4.p1_count(); ++n)
        if (d4.node_order(n) == 4 && four < 0) four = n;

    std::vector<ZigzagStep> down = d4led.zigzag(four, sigma);
    REQUIRE(down.size() == 1);
    std::string diff_step = render_step(d4, down[0]);
    CHECK(diff_step.find(" => ") != std::string::npos);
    CHECK(diff_step.find(") - D(") != std::string::npos);
    CHECK(diff_step.find("*K") != std::string::npos);

    const CurveContext& d6 = context_named("D6");
    const PicardLedger& d6led = ledger_named("D6");
    std::vector<int> sixes;
    for (int n = 0; n < d6.p1_count(); ++n)
        if (d6.node_order(n) == 6) sixes.push_back(n);
    REQUIRE(sixes.size() == 3);
    bool saw_shared = false;
    for (std::size_t i = 0; i < sixes.size() && !saw_shared; ++i)
        for (std::size_t j = i + 1; j < sixes.size() && !saw_shared; ++j)
            for (const ZigzagStep& s : d6led.zigzag(sixes[i], sixes[j]))
                if (std::holds_alternative<RelEqualVia>(s.rel)) {
                    saw_shared = true;
                    std::string eq_step = render_step(d6, s);
                    CHECK(eq_step.find("[shared ") != std::string::npos);
                    CHECK(eq_step.find(" ~ D(") != std::string::npos);
                }
    CHECK(saw_shared);

    // the anchor rule names the canonical class directly
    ZigzagStep anchor_step;
    anchor_step.from = sigma;
    anchor_step.to = d4.p1_count();
    anchor_step.k_delta = 0;
    anchor_step.rel = RelAnchor{sigma};
    CHECK(render_step(d4, anchor_step).find(") ~ K") != std::string::npos);

    // multi-line certificates join steps with newlines
    std::string two = render_certificate(d4, d4led.zigzag(four, sigma));
    CHECK(two == diff_step);
}

TEST_CASE("fixture comparison is exact where no erratum exists") {
    FixtureTable fixture = load_fixture_file(data_path("table_D6.csv"), "D6");
    std::vector<ErratumEntry> errata = load_errata_file(data_path("errata.csv"));
    FixtureDiff diff = diff_against_fixture(all_order_rows("D6"), fixture, errata);

    CHECK(diff.clean());
    CHECK(diff.cells.empty());
    CHECK(diff.cells_compared == 16);
    CHECK(diff.mismatch_count == 0);
    CHECK(diff.errata_applied == 0);

    std::string text = render_diff(diff, fixture, errata);
    CHECK(text.find("all cells match") != std::string::npos);
    CHECK(text.find("verdict: clean (0 errata applied)") != std::string::npos);
}

TEST_CASE("a documented erratum downgrades cleanly instead of failing") {
    FixtureTable fixture = load_fixture_file(data_path("table_C10.csv"), "C10");
    std::vector<ErratumEntry> errata = load_errata_file(data_path("errata.csv"));
    FixtureDiff diff = diff_against_fixture(all_order_rows("C10"), fixture, errata);

    CHECK(diff.clean());
    CHECK(diff.cells_compared == 11);
    REQUIRE(diff.cells.size() == 2);
    for (const CellDiff& cell : diff.cells) {
        CHECK(cell.status == CellStatus::KnownErratum);
        CHECK(cell.h_order == 10);
        CHECK((cell.n == 2 || cell.n == 3));
    }
    CHECK(diff.errata_applied == 1);

    std::string text = render_diff(diff, fixture, errata);
    CHECK(text.find("KnownErratum") != std::string::npos);
    CHECK(text.find("note (|H| = 10)") != std::string::npos);
    CHECK(text.find("verdict: clean (1 errata applied)") != std::string::npos);
}

TEST_CASE("an unexplained divergence is a mismatch") {
    FixtureTable fixture = load_fixture_file(data_path("table_D6.csv"), "D6");
    std::vector<ErratumEntry> errata = load_errata_file(data_path("errata.csv"));
    std::vector<DecompositionReport> rows = all_order_rows("D6");
    rows[0].histogram[0] += 1; // fabricate a wrong cell

    FixtureDiff diff = diff_against_fixture(rows, fixture, errata);
    CHECK_FALSE(diff.clean());
    CHECK(diff.mismatch_count == 1);
    REQUIRE(diff.cells.size() == 1);
    CHECK(diff.cells[0].status == CellStatus::Mismatch);
    CHECK(diff.cells[0].h_order == 6);
    CHECK(diff.cells[0].n == 0);

    std::string text = render_diff(diff, fixture, errata);
    CHECK(text.find("Mismatch at n=0") != std::string::npos);
    CHECK(text.find("verdict: mismatch (1 cells)") != std::string::npos);

    // a row the computation does not cover is a caller error
    FixtureTable c10 = load_fixture_file(data_path("table_C10.csv"), "C10");
    CHECK_THROWS_AS(diff_against_fixture(rows, c10, errata),
                    std::invalid_argument);
}

TEST_CASE("fixture and errata parsing reject malformed input") {
    CHECK_THROWS_AS(parse_fixture_csv("X,n:0\n8,1\n", "D4"), DataFormatError);
    CHECK_THROWS_AS(parse_fixture_csv("H,x:0\n8,1\n", "D4"), DataFormatError);
    CHECK_THROWS_AS(parse_fixture_csv("H,n:0\n8,1\n8,2\n", "D4"), DataFormatError);
    CHECK_THROWS_AS(parse_fixture_csv("H,n:0,n:2\n8,1\n", "D4"), DataFormatError);
    CHECK_THROWS_AS(parse_fixture_csv("H,n:0\n8,-1\n", "D4"), DataFormatError);
    CHECK_THROWS_AS(parse_fixture_csv("H\n8\n", "D4"), DataFormatError);

    FixtureTable ok = parse_fixture_csv("H,n:0,n:2\n8,1,0\n", "D4");
    CHECK(ok.group_name == "D4");
    CHECK((ok.columns == std::vector<int>{0, 2}));
    REQUIRE(ok.rows.size() == 1);
    CHECK(ok.rows[0].h_order == 8);
    CHECK(ok.rows[0].counts.at(0) == 1);
    CHECK(ok.rows[0].counts.count(2) == 0); // zero cells stay implicit

    CHECK_THROWS_AS(parse_errata_csv("group,H\nC10,10\n"), DataFormatError);
    std::vector<ErratumEntry> entries = parse_errata_csv(
        "group,H,fixture_n,fixture_count,derived_n,derived_count,note\n"
        "C10,10,2,1,3,1,a note, with a comma\n");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].group_name == "C10");
    CHECK(entries[0].h_order == 10);
    CHECK(entries[0].fixture_n == 2);
    CHECK(entries[0].derived_n == 3);
    CHECK(entries[0].note == "a note, with a comma");
}

TEST_CASE("format names parse strictly") {
    CHECK(parse_format("md") == RenderFormat::markdown);
    CHECK(parse_format("markdown") == RenderFormat::markdown);
    CHECK(parse_format("csv") == RenderFormat::csv);
    CHECK(parse_format("json") == RenderFormat::json);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
    CHECK_THROWS_AS(parse_format(""), std::invalid_argument);
}
