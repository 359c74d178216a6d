#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2galois/genus2.hpp"

namespace g2galois {

// reference decomposition table shipped as CSV: header "H,n:<d>,n:<d>,...",
// one row per subgroup order
struct FixtureTable {
    struct Row {
        int h_order = 0;
        std::map<int, long long> counts; // dimension -> count, zeros kept out
    };
    std::string group_name;
    std::vector<int> columns; // dimensions in header order
    std::vector<Row> rows;
};

// a documented divergence between a shipped reference cell and the value the
// degree arithmetic derives: the reference shows fixture_count at dimension
// fixture_n where the derivation yields derived_count at derived_n
struct ErratumEntry {
    std::string group_name;
    int h_order = 0;
    int fixture_n = 0;
    long long fixture_count = 0;
    int derived_n = 0;
    long long derived_count = 0;
    std::string note;
};

FixtureTable parse_fixture_csv(const std::string& text, const std::string& group_name);
FixtureTable load_fixture_file(const std::string& path, const std::string& group_name);

std::vector<ErratumEntry> parse_errata_csv(const std::string& text);
std::vector<ErratumEntry> load_errata_file(const std::string& path);

// "table_<name>.csv"
std::string fixture_filename(AutGroupId id);

} // namespace g2galois
