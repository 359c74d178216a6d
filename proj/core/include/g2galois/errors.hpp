#pragma once

#include <stdexcept>
#include <string>

namespace g2galois {

// base class for all library errors; what() is always "<Kind>: <detail>"
class Error : public std::runtime_error {
public:
    Error(const std::string& kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail) {}
};

#define G2GALOIS_DECLARE_ERROR(Kind)                                          \
    class Kind : public Error {                                               \
    public:                                                                   \
        explicit Kind(const std::string& detail) : Error(#Kind, detail) {}    \
    }

G2GALOIS_DECLARE_ERROR(ClosureTooLarge);    // generated group exceeds the element cap
G2GALOIS_DECLARE_ERROR(NotInvertible);      // singular matrix generator
G2GALOIS_DECLARE_ERROR(ParentMismatch);     // set operation across different parent groups
G2GALOIS_DECLARE_ERROR(AmbiguousSigma);     // central involution is not unique
G2GALOIS_DECLARE_ERROR(CatalogCorrupt);     // catalog entry failed validation
G2GALOIS_DECLARE_ERROR(InconsistentLedger); // a class merge contradicts a known offset
G2GALOIS_DECLARE_ERROR(NoPath);             // no derivation chain joins the two classes
G2GALOIS_DECLARE_ERROR(NotVeryAmple);       // divisor degree below the embedding threshold
G2GALOIS_DECLARE_ERROR(NonUniform);         // same-order subgroups gave different histograms
G2GALOIS_DECLARE_ERROR(DataFormatError);    // malformed data file

#undef G2GALOIS_DECLARE_ERROR

} // namespace g2galois
