#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "enriques/errors.hpp"
#include "enriques/root_scheme.hpp"

using namespace enriques;

namespace {

RootScheme::Token seg(std::vector<Mark> marks = {}) { return {true, std::move(marks)}; }
RootScheme::Token gap() { return {}; }

Mark a(int mu) { return {Mark::Kind::APoint, mu}; }
Mark d(int nu) { return {Mark::Kind::DPoint, nu}; }
Mark o() { return {Mark::Kind::CircleVertex, 0}; }

RootScheme random_scheme(std::mt19937& rng, int max_segments = 6) {
    std::uniform_int_distribution<int> seg_count(0, max_segments);
    std::uniform_int_distribution<int> mark_count(0, 2);
    std::uniform_int_distribution<int> mark_pick(0, 2);
    std::uniform_int_distribution<int> value(1, 3);
    std::vector<RootScheme::Token> cycle;
    const int n = seg_count(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<Mark> marks;
        const int m = mark_count(rng);
        for (int k = 0; k < m; ++k) {
            switch (mark_pick(rng)) {
            case 0: marks.push_back(a(value(rng))); break;
            case 1: marks.push_back(d(value(rng) + 1)); break;
            default: marks.push_back(o()); break;
            }
        }
        cycle.push_back(seg(std::move(marks)));
        cycle.push_back(gap());
    }
    return RootScheme{std::move(cycle), std::nullopt};
}

// Oracle: orbit equality by enumerating all rotations and reflections.
bool orbit_equal(const RootScheme& x, const RootScheme& y) {
    if (x.length() != y.length()) return false;
    const int n = static_cast<int>(x.length());
    if (n == 0) return true;
    for (int r = 0; r < n; ++r) {
        if (rotate(x, r).cycle() == y.cycle()) return true;
        if (reflect(rotate(x, r), 0).cycle() == y.cycle()) return true;
    }
    return false;
}

} // namespace

TEST_CASE("token and scheme validation") {
    CHECK_THROWS_AS(RootScheme({seg(), seg()}, std::nullopt), ValidationError);
    CHECK_THROWS_AS(RootScheme({gap()}, std::nullopt), ValidationError);
    CHECK_THROWS_AS(RootScheme({seg()}, std::nullopt), ValidationError);
    CHECK_THROWS_AS(RootScheme({seg(), gap()}, 0), ValidationError);
    CHECK_NOTHROW(RootScheme({seg(), gap()}, 2));
    CHECK(RootScheme{}.empty());
}

TEST_CASE("text round trip") {
    const RootScheme s{{seg({o()}), gap(), seg(), gap(), seg({a(1), d(2)}), gap()}, 2};
    CHECK(s.text() == "([o] . [] . [a:1 d:2] .)@2");
    CHECK(parse_root_scheme(s.text()) == s);
    CHECK(parse_root_scheme("()").empty());
    CHECK(parse_root_scheme("( [o] . [] . [] . )@2").text() == "([o] . [] . [] .)@2");

    std::mt19937 rng(20260808);
    for (int i = 0; i < 150; ++i) {
        const RootScheme r = random_scheme(rng);
        CHECK(parse_root_scheme(r.text()) == r);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_root_scheme(""), ParseError);
    CHECK_THROWS_AS(parse_root_scheme("(["), ParseError);
    CHECK_THROWS_AS(parse_root_scheme("([] .) trailing"), ParseError);
    CHECK_THROWS_AS(parse_root_scheme("([a:0] .)"), ParseError);
    CHECK_THROWS_AS(parse_root_scheme("([d:1] .)"), ParseError);
    CHECK_THROWS_AS(parse_root_scheme("([x] .)"), ParseError);
    CHECK_THROWS_AS(parse_root_scheme("([] .)@0"), ParseError);
    CHECK_THROWS_AS(parse_root_scheme("([] [] .)"), ValidationError);
    CHECK_THROWS_AS(parse_root_scheme("([] . .)"), ValidationError);
}

TEST_CASE("canonical form is rotation and reflection invariant") {
    const RootScheme s{{seg(), gap(), seg({a(1)}), gap()}, std::nullopt};
    for (int r = 0; r < 4; ++r) {
        CHECK(canonical_form(rotate(s, r)) == canonical_form(s));
        CHECK(canonical_form(reflect(s, r)) == canonical_form(s));
    }

    // the two marked/unmarked placements are the same cyclic word
    const RootScheme x{{seg({o()}), gap(), seg(), gap()}, std::nullopt};
    const RootScheme y{{seg(), gap(), seg({o()}), gap()}, std::nullopt};
    CHECK(canonical_form(x) == canonical_form(y));

    // reflection reverses mark order inside a segment
    const RootScheme marked{{seg({a(1), d(2)}), gap()}, std::nullopt};
    const RootScheme mirrored{{seg({d(2), a(1)}), gap()}, std::nullopt};
    CHECK(canonical_form(marked) == canonical_form(mirrored));

    // grade travels with the cycle
    const RootScheme graded{{seg({o()}), gap(), seg(), gap()}, 2};
    CHECK(canonical_form(graded).grade() == 2);
    CHECK(rotate(graded, 1).grade() == 2);
    CHECK(reflect(graded, 3).grade() == 2);
}

TEST_CASE("canonical equality matches brute-force orbit equality") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const RootScheme x = random_scheme(rng);
        RootScheme y = random_scheme(rng);
        if (coin(rng)) {
            // Half the trials compare against a disguised copy of x.
            std::uniform_int_distribution<int> shift(0, std::max(1, (int)x.length()) - 1);
            y = rotate(x, shift(rng));
            if (coin(rng)) y = reflect(y, shift(rng));
        }
        CHECK((canonical_form(x) == canonical_form(y)) == orbit_equal(x, y));
        CHECK(canonical_form(canonical_form(x)) == canonical_form(x)); // idempotent
    }
}

TEST_CASE("segments_scheme and its symmetry groups") {
    CHECK(segments_scheme(0, false).empty());
    CHECK(segments_scheme(4, false).segment_count() == 4);
    CHECK(segments_scheme(4, false).length() == 8);
    CHECK(segments_scheme(2, true).segment_count() == 3);

    const auto sym1 = symmetry_group(segments_scheme(1, false));
    CHECK(sym1.segment_group.order() == 1);
    CHECK(sym1.symmetries.size() == 2); // identity and one mirror

    const auto sym2 = symmetry_group(segments_scheme(2, false));
    CHECK(sym2.segment_group.order() == 2);
    CHECK(identify(sym2.segment_group).name == "Z2");

    const auto sym3 = symmetry_group(segments_scheme(3, false));
    CHECK(sym3.segment_group.order() == 6);
    CHECK(identify(sym3.segment_group).name == "S3");

    const auto sym4 = symmetry_group(segments_scheme(4, false));
    CHECK(sym4.segment_group.order() == 8);
    CHECK(identify(sym4.segment_group).name == "D8");

    for (int i = 3; i <= 6; ++i)
        CHECK(symmetry_group(segments_scheme(i, false)).segment_group.order() ==
              static_cast<std::size_t>(2 * i));
}

TEST_CASE("vertex segment pins the symmetry") {
    // Two plain segments plus the marked one: the marked segment is
    // fixed by every symmetry and the other two form an S2.
    const RootScheme s = segments_scheme(2, true);
    const auto sym = symmetry_group(s);
    CHECK(sym.segment_group.order() == 2);
    CHECK(identify(sym.segment_group).name == "Z2");
    for (const auto& p : sym.segment_group.elements()) CHECK(p(0) == 0);
}

TEST_CASE("symmetries preserve segment mark content") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        const RootScheme s = random_scheme(rng, 5);
        const auto segs = s.segment_positions();
        const auto sym = symmetry_group(s);
        for (const auto& p : sym.segment_group.elements()) {
            for (std::size_t i = 0; i < segs.size(); ++i) {
                auto marks = s.cycle()[segs[i]].marks;
                auto image = s.cycle()[segs[p(static_cast<int>(i))]].marks;
                auto reversed = image;
                std::reverse(reversed.begin(), reversed.end());
                CHECK((marks == image || marks == reversed));
            }
        }
    }
}

TEST_CASE("empty scheme symmetries") {
    const auto sym = symmetry_group(RootScheme{});
    CHECK(sym.segment_group.order() == 1);
    CHECK(sym.symmetries.size() == 1);
}

TEST_CASE("remove_segments") {
    const RootScheme four = segments_scheme(4, false);
    const RootScheme three = remove_segments(four, {1});
    CHECK(three.segment_count() == 3);
    CHECK(three.length() == 6); // gaps merged

    CHECK(remove_segments(four, {}) == four);
    CHECK(remove_segments(four, {0, 1, 2, 3}).empty());

    const RootScheme graded{{seg(), gap(), seg(), gap()}, 4};
    CHECK(remove_segments(graded, {0}).grade() == 4); // grade preserved

    const RootScheme vertexed{{seg({o()}), gap(), seg(), gap()}, std::nullopt};
    CHECK_THROWS_AS(remove_segments(vertexed, {0}), ValidationError);
    CHECK(remove_segments(vertexed, {1}).segment_count() == 1);
    CHECK_THROWS_AS(remove_segments(vertexed, {5}), ValidationError);
}

TEST_CASE("cyclic symmetry text") {
    CHECK(CyclicSymmetry{CyclicSymmetry::Kind::Rotation, 2, 8}.text() == "rot 2");
    CHECK(CyclicSymmetry{CyclicSymmetry::Kind::Reflection, 0, 8}.text() == "refl 0");
}
