#pragma once

#include <string>
#include <vector>

#include "g2galois/decomp.hpp"
#include "g2galois/fixtures.hpp"

namespace g2galois {

enum class RenderFormat { markdown, csv, json };
RenderFormat parse_format(const std::string& text); // "md" | "csv" | "json"

// render one derivation step / chain as text, e.g.
//   "C8#30 => C6#17 : D(C8#30) - D(C6#17) ~ D(C2#1) ~ 1*K"
std::string render_step(const CurveContext& ctx, const ZigzagStep& s);
std::string render_certificate(const CurveContext& ctx,
                               const std::vector<ZigzagStep>& chain);

// render reports. the histogram columns are the column template (normally
// the group's fixture header) merged with every dimension the reports
// actually contain, truncated after the last column any rendered row uses.
// output is deterministic: equal inputs yield identical bytes.
std::string render(const CurveContext& ctx, const DecompositionReport& report,
                   RenderFormat format,
                   const std::vector<int>* column_template = nullptr);
std::string render_table(const CurveContext& ctx,
                         const std::vector<DecompositionReport>& rows,
                         RenderFormat format,
                         const std::vector<int>* column_template = nullptr);

enum class CellStatus { Match, KnownErratum, Mismatch };
const char* cell_status_name(CellStatus s);

struct CellDiff {
    int h_order = 0;
    int n = 0;
    long long expected = 0; // fixture value
    long long actual = 0;   // computed value
    CellStatus status = CellStatus::Match;
};

struct FixtureDiff {
    std::vector<CellDiff> cells; // only non-Match cells are recorded
    int cells_compared = 0;
    int mismatch_count = 0;
    int errata_applied = 0; // erratum entries that explained some cell
    bool clean() const { return mismatch_count == 0; }
};

// compare computed by-order rows against a fixture. a cell differing from
// the fixture is a KnownErratum exactly when an erratum entry for that
// (group, row) adjusts the expectation to the computed value; anything else
// is a Mismatch. the computed rows must cover the fixture's row orders.
FixtureDiff diff_against_fixture(const std::vector<DecompositionReport>& computed_rows,
                                 const FixtureTable& fixture,
                                 const std::vector<ErratumEntry>& errata);

// human-readable diff summary, one line per row plus a verdict line
std::string render_diff(const FixtureDiff& diff, const FixtureTable& fixture,
                        const std::vector<ErratumEntry>& errata);

} // namespace g2galois
