#include "g2galois/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "g2galois/errors.hpp"

namespace g2galois {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataFormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// expected structural facts per group, used to reject corrupted catalogs
struct Expectation {
    int order;
    int subgroup_count;
    int p1_count;
    std::map<int, int> p1_order_census; // |H| -> count over p1 subgroups
    int involution_count;
    int center_order;
};

const std::map<std::string, Expectation>& expectations() {
    static const std::map<std::string, Expectation> table = {
        {"C2", {2, 2, 1, {{2, 1}}, 1, 2}},
        {"C2xC2", {4, 5, 2, {{2, 1}, {4, 1}}, 3, 4}},
        {"D4", {8, 10, 5, {{2, 1}, {4, 3}, {8, 1}}, 5, 2}},
        {"C10", {10, 4, 3, {{2, 1}, {5, 1}, {10, 1}}, 1, 10}},
        {"D6", {12, 16, 9, {{2, 1}, {3, 1}, {4, 3}, {6, 3}, {12, 1}}, 7, 2}},
        {"C3sdD4",
         {24, 30, 21, {{2, 1}, {3, 1}, {4, 7}, {6, 5}, {8, 3}, {12, 3}, {24, 1}},
          9, 2}},
        {"GL2F3",
         {48, 55, 42,
          {{2, 1}, {3, 4}, {4, 9}, {6, 12}, {8, 7}, {12, 4}, {16, 3}, {24, 1},
           {48, 1}},
          13, 2}},
    };
    return table;
}

} // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> entries;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<std::string> fields = split(line, '|');
        if (fields.size() < 3 || fields.size() > 4)
            throw DataFormatError("catalog line " + std::to_string(lineno) +
                                  ": expected 3 or 4 '|' fields");
        CatalogEntry e;
        e.name = fields[0];
        e.kind = fields[1];
        for (const std::string& gen : split(fields[2], ';')) {
            if (gen.empty())
                throw DataFormatError("catalog line " + std::to_string(lineno) +
                                      ": empty generator");
            e.generators.push_back(gen);
        }
        if (fields.size() == 4) {
            const std::string& f = fields[3];
            if (f.rfind("sigma=", 0) != 0)
                throw DataFormatError("catalog line " + std::to_string(lineno) +
                                      ": expected sigma=<element>");
            e.sigma_spec = trim(f.substr(6));
        }
        if (e.kind != "perm" && e.kind != "mat3")
            throw DataFormatError("catalog line " + std::to_string(lineno) +
                                  ": unknown kind '" + e.kind + "'");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
    return parse_catalog(read_file(path));
}

CurveContext build_context(const CatalogEntry& entry) {
    AutGroupId id;
    try {
        id = parse_aut_group(entry.name);
    } catch (const std::invalid_argument& e) {
        throw CatalogCorrupt(e.what());
    }

    std::shared_ptr<const FiniteGroup> group;
    try {
        if (entry.kind == "perm") {
            int degree = 0;
            for (const std::string& s : entry.generators)
                degree = std::max(degree, Permutation::max_point(s));
            std::vector<Permutation> gens;
            for (const std::string& s : entry.generators)
                gens.push_back(Permutation::parse_cycles(s, degree));
            group = std::make_shared<FiniteGroup>(
                FiniteGroup::from_permutations(entry.name, std::move(gens)));
        } else if (entry.kind == "mat3") {
            std::vector<MatF3> gens;
            for (const std::string& s : entry.generators) {
                std::istringstream in(s);
                MatF3 m;
                if (!(in >> m.e[0] >> m.e[1] >> m.e[2] >> m.e[3]))
                    throw DataFormatError("bad matrix entries '" + s + "'");
                std::string rest;
                if (in >> rest)
                    throw DataFormatError("trailing matrix entries '" + s + "'");
                gens.push_back(m);
            }
            group = std::make_shared<FiniteGroup>(
                FiniteGroup::from_matrices(entry.name, std::move(gens)));
        } else {
            throw CatalogCorrupt("unknown kind '" + entry.kind + "'");
        }
    } catch (const Error& e) {
        throw CatalogCorrupt("group '" + entry.name + "': " + e.what());
    }

    int designated = -1;
    if (!entry.sigma_spec.empty()) {
        if (entry.kind != "perm")
            throw CatalogCorrupt("sigma designation requires perm kind");
        // canonical cycle form is the element label, so parse and re-print
        std::string want;
        try {
            want = Permutation::parse_cycles(entry.sigma_spec, 0).cycle_string();
        } catch (const Error& e) {
            throw CatalogCorrupt("group '" + entry.name + "': bad sigma: " + e.what());
        }
        for (int x = 0; x < group->order(); ++x)
            if (group->element_label(x) == want) designated = x;
        if (designated < 0)
            throw CatalogCorrupt("group '" + entry.name + "': sigma element '" +
                                 entry.sigma_spec + "' not found");
    }

    CurveContext ctx;
    try {
        ctx = make_context(id, std::move(group), designated);
    } catch (const Error& e) {
        throw CatalogCorrupt("group '" + entry.name + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw CatalogCorrupt("group '" + entry.name + "': " + e.what());
    }

    // structural validation against the expected censuses
    const Expectation& want = expectations().at(ctx.name);
    auto fail = [&](const std::string& what) {
        throw CatalogCorrupt("group '" + ctx.name + "': " + what);
    };
    if (ctx.group->order() != want.order)
        fail("order " + std::to_string(ctx.group->order()) + ", expected " +
             std::to_string(want.order));
    if (ctx.lattice.count() != want.subgroup_count)
        fail("subgroup count " + std::to_string(ctx.lattice.count()) +
             ", expected " + std::to_string(want.subgroup_count));
    if (ctx.p1_count() != want.p1_count)
        fail("projective-line subgroup count " + std::to_string(ctx.p1_count()) +
             ", expected " + std::to_string(want.p1_count));
    std::map<int, int> census;
    for (int n = 0; n < ctx.p1_count(); ++n) ++census[ctx.node_order(n)];
    if (census != want.p1_order_census) fail("projective-line order census differs");
    int involutions = 0;
    for (int x = 1; x < ctx.group->order(); ++x)
        if (ctx.group->mul(x, x) == 0) ++involutions;
    if (involutions != want.involution_count)
        fail("involution count " + std::to_string(involutions) + ", expected " +
             std::to_string(want.involution_count));
    if (center_subgroup(*ctx.group).order != want.center_order)
        fail("center order differs");

    return ctx;
}

std::vector<CurveContext> load_catalog(const std::string& path) {
    std::vector<CatalogEntry> entries;
    try {
        entries = load_catalog_file(path);
    } catch (const DataFormatError& e) {
        throw CatalogCorrupt(e.what());
    }

    std::map<AutGroupId, CurveContext> by_id;
    for (const CatalogEntry& e : entries) {
        CurveContext ctx = build_context(e);
        if (!by_id.emplace(ctx.id, std::move(ctx)).second)
            throw CatalogCorrupt("duplicate catalog entry '" + e.name + "'");
    }
    std::vector<CurveContext> out;
    for (AutGroupId id : all_aut_groups) {
        auto it = by_id.find(id);
        if (it == by_id.end())
            throw CatalogCorrupt(std::string("catalog is missing '") +
                                 aut_group_name(id) + "'");
        out.push_back(std::move(it->second));
    }
    return out;
}

} // namespace g2galois
