#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "enriques/perm.hpp"
#include "enriques/surface.hpp"

namespace enriques {

class Catalog;

/// Which of the three classified families a decomposition falls in,
/// determined by the distinguished half alone.
enum class Family {
    DelPezzo,    // half1 = V_{d+2} for some d >= 1, connected
    GrSurface,   // half1 disconnected, contains V_d with d >= 4, no V3
    TwoRSurface, // half1 disconnected, contains V3
    Unclassified
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);

/// A decomposition whose realized group on half2 is cut down by the
/// quarter decomposition rather than the full Young product.
struct ExceptionEntry {
    HalfDecomposition decomposition;
    /// Blocks of component indices into the canonical half2 ordering.
    UnorderedPartition quarters_half2;
    GroupId named_group;
    /// Informational; indices into the canonical half1 ordering.
    std::optional<UnorderedPartition> quarters_half1;

    friend bool operator==(const ExceptionEntry&, const ExceptionEntry&) = default;
};

struct GroupReport {
    PermGroup group;
    GroupId id;

    GroupReport() : group(PermGroup::trivial(0)) {}
    GroupReport(PermGroup g, GroupId i) : group(std::move(g)), id(std::move(i)) {}
};

/// Flag carried by TwoRSurface results: the spherical components of
/// half1 cannot be permuted by deformations or automorphisms, and
/// realizability by equivariant auto-homeomorphisms is an open
/// question, so the reported group stays trivial.
inline constexpr std::string_view kHalf1OpenQuestionNote =
    "half1-permutations-by-homeomorphism-open";

struct MonodromyResult {
    Family family = Family::Unclassified;
    GroupReport half1;
    GroupReport half2;
    bool exceptional = false;
    std::optional<UnorderedPartition> quarter_partition; // on half2
    std::vector<std::string> notes;

    nlohmann::ordered_json to_json() const;
};

Family classify_family(const HalfDecomposition& d);

/// The realized permutation groups on both halves. The decomposition
/// must be a derivative of a cataloged extremal type of its family;
/// otherwise NotInCatalogError — the engine never extrapolates.
MonodromyResult monodromy_group(const HalfDecomposition& d, const Catalog& catalog);

/// Whether the permutation of the given half's components (canonical
/// ordering) is realized. Permutations that are not class-preserving
/// are unrealizable by definition.
bool is_realizable(const HalfDecomposition& d, int half_index, const Permutation& pi,
                   const Catalog& catalog);

struct VerifyEntry {
    std::string description;
    bool pass = false;
    std::string details;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;

    bool all_pass() const;
    std::size_t failures() const;
    nlohmann::ordered_json to_json() const;
};

/// Recomputes every cataloged group claim: each exception's stabilizer
/// must identify as the named group, and every non-exceptional
/// derivative with repeated components must realize the full Young
/// product (order checked against the product of class factorials).
VerifyReport verify_catalog(const Catalog& catalog);

} // namespace enriques
