#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "enriques/surface.hpp"

namespace enriques {

/// A bijection of {0, ..., n-1}, stored as its image table.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    static Permutation transposition(int degree, int a, int b);
    /// Cycle notation "(0 1)(2 3)"; "()" is the identity.
    static Permutation from_cycles(int degree, std::string_view text);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
    const std::vector<int>& images() const { return images_; }

    /// (a.compose(b))(x) = a(b(x)) — b acts first.
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;
    int order() const;
    bool is_identity() const;

    std::string cycle_text() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<int> images_;
};

/// A finite permutation group held by explicit element enumeration.
/// Degrees here stay small (<= ~8), so closure and membership are
/// simple scans over a sorted element table.
class PermGroup {
public:
    static PermGroup trivial(int degree);
    /// Breadth-first closure of the generating set.
    static PermGroup generate(int degree, std::vector<Permutation> generators);
    /// Accepts an explicit element list after verifying it is closed;
    /// derives a small generating set for reporting.
    static PermGroup from_elements(int degree, std::vector<Permutation> elements);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; } // sorted
    const std::vector<Permutation>& generators() const { return generators_; }

    bool contains(const Permutation& p) const;
    bool is_subgroup_of(const PermGroup& g) const;
    bool is_abelian() const;
    /// Sorted multiset of element orders, e.g. {1,2,2,2} for Z2xZ2.
    std::vector<int> element_orders() const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.degree_ == b.degree_ && a.elements_ == b.elements_;
    }

private:
    PermGroup(int degree, std::vector<Permutation> elements, std::vector<Permutation> generators)
        : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {}

    int degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<Permutation> generators_;
};

/// Isomorphism-type label for the small groups the theorems name.
/// Determined by (order, abelian flag, element-order multiset); that
/// triple separates every candidate of order <= 8 and pins S4 at 24.
struct GroupId {
    std::string name;

    static GroupId other(std::size_t order) {
        return {"other(" + std::to_string(order) + ")"};
    }

    friend bool operator==(const GroupId&, const GroupId&) = default;
};

GroupId identify(const PermGroup& g);

/// Classical alias for display next to the canonical name
/// ("Z2" is the symmetric group S2; "1" is the trivial group).
std::optional<std::string> classical_alias(const GroupId& id);

/// Order implied by a known GroupId name; nullopt for other(...).
std::optional<std::size_t> group_order_of(const GroupId& id);

bool is_known_group_name(std::string_view name);

/// Pairwise disjoint nonempty blocks of points; points outside all
/// blocks are unconstrained. Stored normalized (blocks sorted).
class UnorderedPartition {
public:
    UnorderedPartition() = default;
    explicit UnorderedPartition(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    bool has_block(const std::vector<int>& sorted_block) const;
    int max_point() const; // -1 when empty

    friend bool operator==(const UnorderedPartition&, const UnorderedPartition&) = default;

private:
    std::vector<std::vector<int>> blocks_;
};

/// Direct product of full symmetric groups on each homeomorphism
/// class of the labeled half; the ambient group of class-preserving
/// permutations.
PermGroup young_group(const LabeledHalf& h);

/// Subgroup of g whose elements map every block of p onto a block of
/// p (blocks may be exchanged).
PermGroup partition_stabilizer(const PermGroup& g, const UnorderedPartition& p);

bool contains(const PermGroup& g, const Permutation& p);

/// {"order": ..., "id": ..., "generators": [...]}
nlohmann::ordered_json group_to_json(const PermGroup& g, const GroupId& id);

} // namespace enriques
