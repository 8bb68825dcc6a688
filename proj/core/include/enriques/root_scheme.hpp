#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "enriques/perm.hpp"

namespace enriques {

/// A distinguished point on a segment of the real root locus.
struct Mark {
    enum class Kind { APoint, DPoint, CircleVertex };

    Kind kind = Kind::CircleVertex;
    int value = 0; // mu >= 1 for APoint, nu >= 2 for DPoint, unused otherwise

    std::string text() const; // "a:1", "d:2", "o"

    friend bool operator==(const Mark&, const Mark&) = default;
};

bool operator<(const Mark& a, const Mark& b);

/// A real root scheme: a cyclic word of segments and gaps on an
/// oriented circle. Segments carry mark sequences; the optional grade
/// tags suitable-pair schemes. Purely combinatorial — metric positions
/// are not modeled.
class RootScheme {
public:
    struct Token {
        bool segment = false;
        std::vector<Mark> marks; // empty for gaps

        friend bool operator==(const Token&, const Token&) = default;
    };

    RootScheme() = default;
    RootScheme(std::vector<Token> cycle, std::optional<int> grade);

    const std::vector<Token>& cycle() const { return cycle_; }
    std::optional<int> grade() const { return grade_; }
    std::size_t length() const { return cycle_.size(); }
    bool empty() const { return cycle_.empty(); }

    int segment_count() const;
    std::vector<int> segment_positions() const;

    /// ASCII form in stored cycle order, e.g. "([o] . [] . [] .)@2".
    std::string text() const;

    friend bool operator==(const RootScheme&, const RootScheme&) = default;

private:
    std::vector<Token> cycle_;
    std::optional<int> grade_;
};

bool operator<(const RootScheme::Token& a, const RootScheme::Token& b);

RootScheme parse_root_scheme(std::string_view text);

/// Rotation of the cycle by `shift`; reflection through axis parameter
/// k maps position i to (k - i) mod length and reverses the mark order
/// inside each segment (reflections reverse the circle orientation).
RootScheme rotate(const RootScheme& s, int shift);
RootScheme reflect(const RootScheme& s, int axis);

/// Lexicographically minimal representative over all rotations and
/// both orientations (gap < segment, marks compared componentwise).
RootScheme canonical_form(const RootScheme& s);

struct CyclicSymmetry {
    enum class Kind { Rotation, Reflection };

    Kind kind = Kind::Rotation;
    int amount = 0; // rotation shift, or reflection axis parameter
    int degree = 0; // cycle length

    std::string text() const;

    friend bool operator==(const CyclicSymmetry&, const CyclicSymmetry&) = default;
};

struct SchemeSymmetries {
    std::vector<CyclicSymmetry> symmetries;
    PermGroup segment_group; // action induced on segment positions

    SchemeSymmetries() : segment_group(PermGroup::trivial(0)) {}
};

/// All rotations/reflections fixing the token word, and the permutation
/// group they induce on the segments (hence on the ovals they track).
SchemeSymmetries symmetry_group(const RootScheme& s);

/// Deletes the given segments (0-based among segments) and merges the
/// gaps around them. Segments carrying a circle vertex cannot be
/// removed. Grade is preserved.
RootScheme remove_segments(const RootScheme& s, const std::set<int>& segment_indices);

/// i unmarked segments evenly alternating with gaps; with
/// vertex_segment, one extra segment carrying the circle vertex.
RootScheme segments_scheme(int segments, bool vertex_segment);

} // namespace enriques
