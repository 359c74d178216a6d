#pragma once

#include <compare>
#include <string>

#include "g2galois/subgroup.hpp"

namespace g2galois {

// isomorphism-sensitive invariants of a subgroup. the tuple separates every
// isomorphism type that occurs among subgroups of the catalog groups (the
// label table asserts pairwise distinctness when it is built, and the test
// suite audits residual collisions with an explicit isomorphism search).
struct IsoFingerprint {
    int order = 0;
    bool is_abelian = false;
    bool is_cyclic = false;
    int exponent = 0;
    int involution_count = 0;
    int center_order = 0;
    int conjugacy_class_count = 0;
    int derived_subgroup_order = 0;

    friend auto operator<=>(const IsoFingerprint&, const IsoFingerprint&) = default;
};

IsoFingerprint fingerprint(const Subgroup& h);

// human-readable isomorphism-type label ("C6", "S3", "Q8", "SD16", ...).
// cyclic fingerprints label as "C<order>"; non-cyclic ones are looked up in
// a table of canonical constructions; anything unmatched is "UnknownType".
std::string iso_label(const IsoFingerprint& fp);

// exhaustive generator-image isomorphism search. works across different
// parent groups; intended for audits, not hot paths.
bool is_isomorphic(const Subgroup& a, const Subgroup& b);

} // namespace g2galois
