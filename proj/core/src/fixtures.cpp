#include "g2galois/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "g2galois/errors.hpp"

namespace g2galois {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(strip(cur));
    return fields;
}

long long parse_int(const std::string& field, const std::string& where) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(field, &used);
    } catch (const std::exception&) {
        throw DataFormatError(where + ": expected an integer, got \"" + field + "\"");
    }
    if (used != field.size())
        throw DataFormatError(where + ": trailing characters in \"" + field + "\"");
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataFormatError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

} // namespace

FixtureTable parse_fixture_csv(const std::string& text, const std::string& group_name) {
    std::vector<std::string> lines = nonempty_lines(text);
    if (lines.empty())
        throw DataFormatError("fixture for " + group_name + " is empty");

    FixtureTable table;
    table.group_name = group_name;

    std::vector<std::string> header = split_commas(lines[0]);
    if (header.empty() || header[0] != "H")
        throw DataFormatError("fixture for " + group_name +
                              ": header must start with \"H\"");
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i].rfind("n:", 0) != 0)
            throw DataFormatError("fixture for " + group_name +
                                  ": column \"" + header[i] +
                                  "\" is not of the form n:<dimension>");
        table.columns.push_back(static_cast<int>(
            parse_int(header[i].substr(2), "fixture header for " + group_name)));
    }
    if (table.columns.empty())
        throw DataFormatError("fixture for " + group_name + " has no dimension columns");

    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::vector<std::string> fields = split_commas(lines[li]);
        std::string where = "fixture for " + group_name + " row " + std::to_string(li);
        if (fields.size() != header.size())
            throw DataFormatError(where + ": expected " +
                                  std::to_string(header.size()) + " fields, got " +
                                  std::to_string(fields.size()));
        FixtureTable::Row row;
        row.h_order = static_cast<int>(parse_int(fields[0], where));
        for (const FixtureTable::Row& prior : table.rows)
            if (prior.h_order == row.h_order)
                throw DataFormatError(where + ": duplicate order " +
                                      std::to_string(row.h_order));
        for (std::size_t i = 1; i < fields.size(); ++i) {
            long long count = parse_int(fields[i], where);
            if (count < 0)
                throw DataFormatError(where + ": negative count " + fields[i]);
            if (count != 0) row.counts[table.columns[i - 1]] = count;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

FixtureTable load_fixture_file(const std::string& path, const std::string& group_name) {
    return parse_fixture_csv(read_file(path), group_name);
}

std::vector<ErratumEntry> parse_errata_csv(const std::string& text) {
    std::vector<std::string> lines = nonempty_lines(text);
    if (lines.empty()) throw DataFormatError("errata file is empty");

    const std::string expected_header =
        "group,H,fixture_n,fixture_count,derived_n,derived_count,note";
    if (lines[0] != expected_header)
        throw DataFormatError("errata header must be \"" + expected_header + "\"");

    std::vector<ErratumEntry> entries;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::string where = "errata row " + std::to_string(li);
        // the note is free text: split only the first six commas
        std::vector<std::string> fields;
        std::string rest = lines[li];
        for (int i = 0; i < 6; ++i) {
            std::size_t comma = rest.find(',');
            if (comma == std::string::npos)
                throw DataFormatError(where + ": expected 7 fields");
            fields.push_back(strip(rest.substr(0, comma)));
            rest = rest.substr(comma + 1);
        }
        fields.push_back(strip(rest));

        ErratumEntry entry;
        entry.group_name = fields[0];
        entry.h_order = static_cast<int>(parse_int(fields[1], where));
        entry.fixture_n = static_cast<int>(parse_int(fields[2], where));
        entry.fixture_count = parse_int(fields[3], where);
        entry.derived_n = static_cast<int>(parse_int(fields[4], where));
        entry.derived_count = parse_int(fields[5], where);
        entry.note = fields[6];
        if (entry.group_name.empty())
            throw DataFormatError(where + ": empty group name");
        if (entry.note.empty())
            throw DataFormatError(where + ": empty note");
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<ErratumEntry> load_errata_file(const std::string& path) {
    return parse_errata_csv(read_file(path));
}

std::string fixture_filename(AutGroupId id) {
    return std::string("table_") + aut_group_name(id) + ".csv";
}

} // namespace g2galois
