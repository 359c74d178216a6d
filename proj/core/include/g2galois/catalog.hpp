#pragma once

#include <string>
#include <vector>

#include "g2galois/genus2.hpp"

namespace g2galois {

// one line of the catalog data file
struct CatalogEntry {
    std::string name;
    std::string kind;                    // "perm" | "mat3"
    std::vector<std::string> generators; // unparsed generator strings
    std::string sigma_spec;              // optional designated involution
};

// parse catalog text: '#' comments, blank lines ignored, fields '|'-separated
std::vector<CatalogEntry> parse_catalog(const std::string& text);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

// build and validate a single context. validation covers group order,
// subgroup census, projective-line census, involution count and center
// order against the expected values for the named group; any failure throws
// CatalogCorrupt.
CurveContext build_context(const CatalogEntry& entry);

// build all seven contexts from a catalog file, in AutGroupId order; throws
// CatalogCorrupt if any group is missing, duplicated, or invalid
std::vector<CurveContext> load_catalog(const std::string& path);

} // namespace g2galois
