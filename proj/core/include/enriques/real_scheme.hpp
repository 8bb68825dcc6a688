#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace enriques {

/// An oval together with the ovals in its interior. Children are kept
/// canonically sorted, so structural equality is multiset equality.
class OvalNode {
public:
    OvalNode() = default;
    explicit OvalNode(std::vector<OvalNode> children);

    const std::vector<OvalNode>& children() const { return children_; }
    bool empty() const { return children_.empty(); }
    int depth() const;      // 1 for an empty oval
    int oval_count() const; // ovals in the subtree, including this one
    std::string item_text() const; // "1" or "1<...>"

    friend bool operator==(const OvalNode&, const OvalNode&) = default;

private:
    std::vector<OvalNode> children_;
};

/// Sort key for sibling subtrees: ascending (depth, size, text).
bool canonical_less(const OvalNode& a, const OvalNode& b);

/// The real scheme of a plane curve: nesting forest of ovals, plus an
/// optional one-sided component J (never interior to an oval).
class OvalForest {
public:
    OvalForest() = default;
    OvalForest(std::vector<OvalNode> roots, bool has_j);

    const std::vector<OvalNode>& roots() const { return roots_; }
    bool has_j() const { return has_j_; }
    bool empty() const { return roots_.empty() && !has_j_; }
    int oval_count() const;
    int depth() const; // 0 for an empty forest
    std::string body_text() const;

    friend bool operator==(const OvalForest&, const OvalForest&) = default;

private:
    std::vector<OvalNode> roots_;
    bool has_j_ = false;
};

/// Real scheme on the quadric surface: zones Z1..Zk separated by k-1
/// components homologous to the exceptional section. The zone order is
/// orientation-dependent; the reversal is a distinct value unless the
/// sequence is palindromic.
class Sigma2Scheme {
public:
    explicit Sigma2Scheme(std::vector<OvalForest> zones);

    const std::vector<OvalForest>& zones() const { return zones_; }
    int bars() const { return static_cast<int>(zones_.size()) - 1; }
    int oval_count() const;
    Sigma2Scheme reversed() const;

    friend bool operator==(const Sigma2Scheme&, const Sigma2Scheme&) = default;

private:
    std::vector<OvalForest> zones_;
};

using Scheme = std::variant<OvalForest, Sigma2Scheme>;

/// ASCII grammar: Scheme ::= "<" Body ">" with "u" for disjoint union
/// and "|" separating zones; "J" names the one-sided component; a
/// bare number n stands for n disjoint empty ovals; "1<Body>" nests.
/// A "|" anywhere selects the quadric-surface reading.
Scheme parse_scheme(std::string_view text);

std::string canonical_text(const OvalForest& f);
std::string canonical_text(const Sigma2Scheme& s);
std::string canonical_text(const Scheme& s);

/// True iff b equals a or the zone reversal of a.
bool reversal_equivalent(const Sigma2Scheme& a, const Sigma2Scheme& b);

enum class SchemeFamily { PlaneQuartic, Sigma2Cubic, P4QuadricPair };

std::string_view to_string(SchemeFamily f);

struct SchemeClassRecord {
    std::string key; // canonical scheme text, or canonical half text for P4QuadricPair
    bool all_oval_permutations_rigid = false;

    friend bool operator==(const SchemeClassRecord&, const SchemeClassRecord&) = default;
};

/// One family's rigid-isotopy classification, keyed by canonical text.
struct RigidIsotopyCatalog {
    SchemeFamily family = SchemeFamily::PlaneQuartic;
    std::vector<SchemeClassRecord> classes;

    friend bool operator==(const RigidIsotopyCatalog&, const RigidIsotopyCatalog&) = default;
};

/// Canonicalizes the key, then looks it up; nullptr when the key names
/// no class of the family (or has the wrong shape for it).
const SchemeClassRecord* catalog_lookup(const RigidIsotopyCatalog& cat, std::string_view key);

} // namespace enriques
