#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "enriques/errors.hpp"
#include "enriques/perm.hpp"

using namespace enriques;

namespace {

SurfaceComponent S() { return SurfaceComponent::sphere(); }
SurfaceComponent V(int p) { return SurfaceComponent::nonorientable(p); }

Permutation cyc(int degree, std::string_view text) {
    return Permutation::from_cycles(degree, text);
}

// Oracle: closure by repeated pairwise multiplication until fixpoint,
// independent of the breadth-first implementation in PermGroup.
std::vector<Permutation> naive_closure(int degree, const std::vector<Permutation>& gens) {
    std::set<Permutation> s;
    s.insert(Permutation::identity(degree));
    for (const auto& g : gens) s.insert(g);
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<Permutation> current(s.begin(), s.end());
        for (const auto& a : current)
            for (const auto& b : current)
                if (s.insert(a.compose(b)).second) changed = true;
    }
    return {s.begin(), s.end()};
}

Permutation random_permutation(int degree, std::mt19937& rng) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = i;
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation{std::move(im)};
}

} // namespace

TEST_CASE("permutation basics") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), ValidationError);
    CHECK_THROWS_AS(Permutation({0, 3}), ValidationError);

    const auto p = cyc(4, "(0 1)(2 3)");
    CHECK(p.cycle_text() == "(0 1)(2 3)");
    CHECK(p.order() == 2);
    CHECK(p.compose(p).is_identity());

    const auto q = cyc(4, "(0 1 2 3)");
    CHECK(q.order() == 4);
    CHECK(q.inverse().compose(q).is_identity());
    CHECK(q.inverse() == cyc(4, "(0 3 2 1)"));
    CHECK(Permutation::identity(5).cycle_text() == "()");
    CHECK(cyc(3, "()") == Permutation::identity(3));

    CHECK_THROWS_AS(cyc(2, "(0 5)"), ParseError);
    CHECK_THROWS_AS(cyc(4, "(0 1)(1 2)"), ParseError);
}

TEST_CASE("composition convention") {
    const auto a = cyc(3, "(0 1)");
    const auto b = cyc(3, "(1 2)");
    // (a∘b)(1) = a(b(1)) = a(2) = 2
    CHECK(a.compose(b)(1) == 2);
    CHECK(a.compose(b) == cyc(3, "(0 1 2)"));
}

TEST_CASE("generate closes the generating set") {
    CHECK(PermGroup::generate(2, {cyc(2, "(0 1)")}).order() == 2);
    CHECK(PermGroup::generate(3, {}).order() == 1);

    // Dihedral stabilizer of the pair partition {{0,1},{2,3}}.
    const auto g = PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(2 3)"), cyc(4, "(0 2)(1 3)")});
    CHECK(g.order() == 8);
    CHECK(identify(g).name == "D8");

    CHECK_THROWS_AS(PermGroup::generate(3, {cyc(4, "(0 1)")}), ValidationError);
}

TEST_CASE("generate vs naive fixpoint closure") {
    std::mt19937 rng(20260808);
    std::uniform_int_distribution<int> degree_dist(1, 5);
    std::uniform_int_distribution<int> gen_count(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const int degree = degree_dist(rng);
        std::vector<Permutation> gens;
        const int k = gen_count(rng);
        for (int i = 0; i < k; ++i) gens.push_back(random_permutation(degree, rng));
        const auto group = PermGroup::generate(degree, gens);
        CHECK(group.elements() == naive_closure(degree, gens));
    }
}

TEST_CASE("generate is idempotent") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = PermGroup::generate(
            4, {random_permutation(4, rng), random_permutation(4, rng)});
        CHECK(PermGroup::generate(4, g.elements()) == g);
        CHECK(PermGroup::from_elements(4, g.elements()) == g);
    }
}

TEST_CASE("from_elements rejects unclosed sets") {
    CHECK_THROWS_AS(PermGroup::from_elements(3, {Permutation::identity(3), cyc(3, "(0 1 2)")}),
                    ValidationError);
    CHECK_THROWS_AS(PermGroup::from_elements(3, {}), ValidationError);
}

TEST_CASE("young groups") {
    const LabeledHalf mixed{{{"a", V(1)}, {"b", S()}, {"c", S()}, {"d", S()}}};
    CHECK(young_group(mixed).order() == 6);

    const LabeledHalf spheres{{{"a", S()}, {"b", S()}, {"c", S()}, {"d", S()}}};
    CHECK(young_group(spheres).order() == 24);
    CHECK(identify(young_group(spheres)).name == "S4");

    CHECK(young_group(LabeledHalf{{{"a", V(3)}}}).order() == 1);
    CHECK(young_group(LabeledHalf{}).order() == 1);

    // entry order does not matter, only the component classes
    const LabeledHalf shuffled{{{"x", S()}, {"y", V(1)}, {"z", S()}}};
    CHECK(young_group(shuffled).order() == 2);
    CHECK(young_group(shuffled).contains(Permutation::from_cycles(3, "(0 2)")));
}

TEST_CASE("young group order is the product of class factorials") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> count(0, 8);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<SurfaceComponent> comps;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            const int c = pick(rng);
            comps.push_back(c == 0 ? S() : c == 1 ? V(1) : V(3));
        }
        const LabeledHalf h = LabeledHalf::from_half(Half{comps});
        std::size_t expected = 1;
        for (const auto& block : h.class_partition())
            for (std::size_t k = 2; k <= block.size(); ++k) expected *= k;
        CHECK(young_group(h).order() == expected);
    }
}

TEST_CASE("partition stabilizers") {
    const LabeledHalf spheres{{{"a", S()}, {"b", S()}, {"c", S()}, {"d", S()}}};
    const auto s4 = young_group(spheres);

    const auto d8 = partition_stabilizer(s4, UnorderedPartition{{{0, 1}, {2, 3}}});
    CHECK(d8.order() == 8);
    CHECK(identify(d8).name == "D8");

    // Brute force over all 24 permutations, independent of the filter.
    std::size_t expected = 0;
    for (const auto& pi : s4.elements()) {
        auto img = [&](std::vector<int> b) {
            for (auto& x : b) x = pi(x);
            std::sort(b.begin(), b.end());
            return b;
        };
        const auto i1 = img({0, 1});
        const auto i2 = img({2, 3});
        const bool keeps = (i1 == std::vector<int>{0, 1} && i2 == std::vector<int>{2, 3}) ||
                           (i1 == std::vector<int>{2, 3} && i2 == std::vector<int>{0, 1});
        if (keeps) ++expected;
    }
    CHECK(d8.order() == expected);

    // {V1, 4S} with quarters (V1 + 2S) | (2S): blocks of unequal size
    // cannot swap, leaving Z2 x Z2.
    const LabeledHalf v1_4s = LabeledHalf::from_half(Half{{V(1), S(), S(), S(), S()}});
    const auto stab = partition_stabilizer(young_group(v1_4s),
                                           UnorderedPartition{{{0, 1, 2}, {3, 4}}});
    CHECK(stab.order() == 4);
    CHECK(identify(stab).name == "Z2xZ2");

    // {V1, 2S} with quarters (V1 + S) | (S): swapping the spheres maps
    // {V1, s1} to a non-block, so only the identity survives.
    const LabeledHalf v1_2s = LabeledHalf::from_half(Half{{V(1), S(), S()}});
    const auto trivial =
        partition_stabilizer(young_group(v1_2s), UnorderedPartition{{{0, 1}, {2}}});
    CHECK(trivial.order() == 1);
    CHECK(identify(trivial).name == "1");

    CHECK_THROWS_AS(partition_stabilizer(s4, UnorderedPartition{{{0, 9}}}), ValidationError);
}

TEST_CASE("partition stabilizer limit cases") {
    const LabeledHalf spheres{{{"a", S()}, {"b", S()}, {"c", S()}, {"d", S()}}};
    const auto s4 = young_group(spheres);

    // Blocks are exchangeable (the D8 quarter cases need this), so the
    // all-singletons partition constrains nothing.
    CHECK(partition_stabilizer(s4, UnorderedPartition{{{0}, {1}, {2}, {3}}}) == s4);
    CHECK(partition_stabilizer(s4, UnorderedPartition{{{0, 1, 2, 3}}}) == s4);
    CHECK(partition_stabilizer(s4, UnorderedPartition{}) == s4);
    // Pinning a point needs a singleton among larger blocks.
    CHECK(partition_stabilizer(s4, UnorderedPartition{{{0}, {1, 2, 3}}}).order() == 6);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = PermGroup::generate(
            5, {random_permutation(5, rng), random_permutation(5, rng)});
        const auto stab = partition_stabilizer(g, UnorderedPartition{{{0, 1}, {2, 3}}});
        CHECK(stab.is_subgroup_of(g));
    }
}

TEST_CASE("contains") {
    const LabeledHalf spheres{{{"a", S()}, {"b", S()}, {"c", S()}, {"d", S()}}};
    const auto d8 = partition_stabilizer(young_group(spheres),
                                         UnorderedPartition{{{0, 1}, {2, 3}}});
    CHECK(d8.contains(cyc(4, "(0 1)")));
    CHECK(!d8.contains(cyc(4, "(1 2)")));
    CHECK(d8.contains(Permutation::identity(4)));
    CHECK_THROWS_AS(d8.contains(Permutation::identity(3)), ValidationError);
}

TEST_CASE("identify small groups") {
    CHECK(identify(PermGroup::trivial(3)).name == "1");
    CHECK(identify(PermGroup::generate(2, {cyc(2, "(0 1)")})).name == "Z2");
    CHECK(identify(PermGroup::generate(3, {cyc(3, "(0 1 2)")})).name == "Z3");
    CHECK(identify(PermGroup::generate(4, {cyc(4, "(0 1 2 3)")})).name == "Z4");
    CHECK(identify(PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(2 3)")})).name == "Z2xZ2");
    CHECK(identify(PermGroup::generate(3, {cyc(3, "(0 1)"), cyc(3, "(0 1 2)")})).name == "S3");
    CHECK(identify(PermGroup::generate(5, {cyc(5, "(0 1)(2 3 4)")})).name == "Z6");
    CHECK(identify(PermGroup::generate(8, {cyc(8, "(0 1 2 3 4 5 6 7)")})).name == "Z8");
    CHECK(identify(PermGroup::generate(6, {cyc(6, "(0 1 2 3)"), cyc(6, "(4 5)")})).name ==
          "Z4xZ2");
    CHECK(identify(PermGroup::generate(6, {cyc(6, "(0 1)"), cyc(6, "(2 3)"), cyc(6, "(4 5)")}))
              .name == "Z2^3");
    CHECK(identify(PermGroup::generate(4, {cyc(4, "(0 1 2 3)"), cyc(4, "(0 2)")})).name == "D8");
    // Quaternion group via its right regular action; points are
    // 1,-1,i,-i,j,-j,k,-k in that order.
    const auto q8 = PermGroup::generate(
        8, {cyc(8, "(0 2 1 3)(4 7 5 6)"), cyc(8, "(0 4 1 5)(2 6 3 7)")});
    CHECK(q8.order() == 8);
    CHECK(identify(q8).name == "Q8");
    CHECK(identify(PermGroup::generate(4, {cyc(4, "(0 1 2)"), cyc(4, "(0 1)(2 3)")})).name ==
          "A4");
    CHECK(identify(PermGroup::generate(7, {cyc(7, "(0 1 2 3)(4 5 6)")})).name == "Z12-class");
    CHECK(identify(PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(0 1 2 3)")})).name == "S4");
    CHECK(identify(PermGroup::generate(5, {cyc(5, "(0 1 2 3 4)")})).name == "other(5)");
    CHECK(GroupId::other(5).name == "other(5)");
}

TEST_CASE("identify is conjugation invariant") {
    std::mt19937 rng(17);
    const LabeledHalf spheres{{{"a", S()}, {"b", S()}, {"c", S()}, {"d", S()}}};
    const auto d8 = partition_stabilizer(young_group(spheres),
                                         UnorderedPartition{{{0, 1}, {2, 3}}});
    const auto base = identify(d8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sigma = random_permutation(4, rng);
        std::vector<Permutation> conjugated;
        for (const auto& e : d8.elements())
            conjugated.push_back(sigma.compose(e).compose(sigma.inverse()));
        CHECK(identify(PermGroup::from_elements(4, conjugated)) == base);
    }
}

TEST_CASE("group ids carry alias and order info") {
    CHECK(classical_alias(GroupId{"Z2"}) == std::string("S2"));
    CHECK(classical_alias(GroupId{"1"}) == std::string("trivial"));
    CHECK(!classical_alias(GroupId{"D8"}).has_value());
    CHECK(group_order_of(GroupId{"D8"}) == std::size_t{8});
    CHECK(!group_order_of(GroupId{"other(5)"}).has_value());
    CHECK(is_known_group_name("Z2xZ2"));
    CHECK(!is_known_group_name("F20"));
}

TEST_CASE("unordered partition validation") {
    CHECK_THROWS_AS((UnorderedPartition{{{0, 1}, {1, 2}}}), ValidationError);
    CHECK_THROWS_AS((UnorderedPartition{{{}}}), ValidationError);
    CHECK_THROWS_AS((UnorderedPartition{{{-1}}}), ValidationError);
    const UnorderedPartition p{{{2, 3}, {0, 1}}};
    CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(p.max_point() == 3);
    CHECK(UnorderedPartition{}.max_point() == -1);
}

TEST_CASE("group json shape") {
    const auto g = PermGroup::generate(2, {cyc(2, "(0 1)")});
    const auto j = group_to_json(g, identify(g));
    CHECK(j["order"] == 2);
    CHECK(j["id"] == "Z2");
    CHECK(j["generators"][0] == "(0 1)");
    CHECK(j.dump() == group_to_json(g, identify(g)).dump());
}
