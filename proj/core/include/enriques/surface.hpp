#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace enriques {

/// One closed connected surface: the sphere S, the orientable surface
/// Sg of genus g >= 1, or the nonorientable surface Vp with p >= 1
/// crosscaps. The sphere is its own variant; Sg0/V0 do not exist.
class SurfaceComponent {
public:
    enum class Shape { Nonorientable, Orientable, Sphere };

    static SurfaceComponent sphere() { return {Shape::Sphere, 0}; }
    static SurfaceComponent orientable(int genus);
    static SurfaceComponent nonorientable(int crosscaps);

    Shape shape() const { return shape_; }
    bool is_sphere() const { return shape_ == Shape::Sphere; }
    int genus() const { return shape_ == Shape::Orientable ? param_ : 0; }
    int crosscaps() const { return shape_ == Shape::Nonorientable ? param_ : 0; }

    /// S -> 2, Sg -> 2 - 2g, Vp -> 2 - p
    int euler_characteristic() const;
    /// Total mod-2 Betti number: S -> 2, Sg -> 2 + 2g, Vp -> 2 + p
    int total_betti() const;

    std::string text() const; // "S", "Sg2", "V3"

    friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;

private:
    SurfaceComponent(Shape shape, int param) : shape_(shape), param_(param) {}

    Shape shape_;
    int param_; // genus or crosscaps; 0 for the sphere
};

/// Writing order of the notation: Vp by descending p, then Sg by
/// descending g, then spheres last.
bool canonical_less(const SurfaceComponent& a, const SurfaceComponent& b);

/// A half of the real part: an unordered multiset of components.
/// Stored canonically sorted, so equality is multiset equality.
class Half {
public:
    Half() = default;
    explicit Half(std::vector<SurfaceComponent> components);

    const std::vector<SurfaceComponent>& components() const { return components_; }
    bool empty() const { return components_.empty(); }
    std::size_t size() const { return components_.size(); }

    /// Sum of component Betti numbers; 0 for the empty half.
    int total_betti() const;
    /// Minimum Euler characteristic over components; nullopt when empty.
    std::optional<int> min_euler() const;

    /// Canonical notation, e.g. "V1 + 4S"; "0" for the empty half.
    std::string text() const;

    friend bool operator==(const Half&, const Half&) = default;

private:
    std::vector<SurfaceComponent> components_;
};

/// Grammar: Half ::= "0" | Term ("+" Term)* ; Term ::= [count] Comp ;
/// Comp ::= "S" | "Sg" nat | "V" nat. Whitespace is ignored; "Sg0" and
/// "V0" are rejected (the sphere is spelled "S").
Half parse_half(std::string_view text);

/// The ordered pair of halves. half1 is the distinguished half; the
/// two are never merged or swapped implicitly.
struct HalfDecomposition {
    Half half1;
    Half half2;

    std::string text() const; // "{V3} u {V1 + 4S}"

    friend bool operator==(const HalfDecomposition&, const HalfDecomposition&) = default;
};

enum class Kind { Hyperbolic, Parabolic, Elliptic, Undefined };

std::string_view to_string(Kind k);

/// Sign of the minimal Euler characteristic over all components of
/// both halves; Undefined when the real part is empty.
Kind surface_kind(const HalfDecomposition& d);

struct LabeledComponent {
    std::string label;
    SurfaceComponent component;

    friend bool operator==(const LabeledComponent&, const LabeledComponent&) = default;
};

/// A half whose components carry pairwise distinct labels, so that
/// permutations have a stable domain. Entry order is kept as given.
class LabeledHalf {
public:
    LabeledHalf() = default;
    explicit LabeledHalf(std::vector<LabeledComponent> entries);

    /// Canonical component order, labels "0", "1", ...
    static LabeledHalf from_half(const Half& h);

    const std::vector<LabeledComponent>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    Half to_half() const;

    /// Entry positions grouped by equal component; blocks in canonical
    /// component order, positions ascending within a block.
    std::vector<std::vector<int>> class_partition() const;

private:
    std::vector<LabeledComponent> entries_;
};

/// Labels grouped by homeomorphism type. Blocks ordered by canonical
/// component order, labels sorted within each block.
std::vector<std::vector<std::string>> homeomorphism_classes(const LabeledHalf& h);

} // namespace enriques
