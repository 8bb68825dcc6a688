#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "enriques/monodromy.hpp"
#include "enriques/real_scheme.hpp"
#include "enriques/root_scheme.hpp"
#include "enriques/surface.hpp"

namespace enriques {

struct FamilyEntry {
    Family tag = Family::Unclassified;
    std::vector<HalfDecomposition> extremal;
    std::vector<ExceptionEntry> exceptions;

    friend bool operator==(const FamilyEntry&, const FamilyEntry&) = default;
};

struct RootSchemeEntry {
    std::string key;
    RootScheme scheme;
    /// Entries not pinned by the classification proofs; excluded from
    /// verification.
    bool provisional = false;

    friend bool operator==(const RootSchemeEntry&, const RootSchemeEntry&) = default;
};

/// The transcribed theorem data: families with extremal decompositions
/// and exceptions, the three rigid-isotopy class catalogs, and the
/// root schemes the proofs use. Immutable once loaded.
class Catalog {
public:
    std::string version;
    std::vector<FamilyEntry> families;
    std::vector<RigidIsotopyCatalog> scheme_catalogs;
    std::vector<RootSchemeEntry> root_schemes;

    const FamilyEntry* family(Family tag) const;
    const RigidIsotopyCatalog* scheme_catalog(SchemeFamily f) const;
    const ExceptionEntry* find_exception(const HalfDecomposition& d) const;
    const RootSchemeEntry* root_scheme(std::string_view key) const;

    friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// Parses and fully validates catalog text (ParseError on malformed
/// JSON or notation, ValidationError on violated invariants, e.g. an
/// exception that is not a derivative of any extremal entry).
Catalog parse_catalog(std::string_view json_text);

Catalog load_catalog(const std::filesystem::path& path);

/// Canonical JSON text; parse_catalog(catalog_text(c)) == c.
std::string catalog_text(const Catalog& c);

/// The catalog shipped inside the library.
const Catalog& embedded_default();

/// The raw text of the shipped catalog file.
std::string_view embedded_default_text();

} // namespace enriques
