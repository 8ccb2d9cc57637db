#include <array>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "latmine/errors.hpp"
#include "latmine/miner.hpp"
#include "oracle.hpp"

using namespace latmine;
using fixtures::items;

namespace {

constexpr Strategy strategies[] = {Strategy::levelwise, Strategy::dfs, Strategy::hybrid};

std::vector<oracle::Entry> entries(const std::vector<MinedSet>& sets) {
    std::vector<oracle::Entry> out;
    for (const auto& s : sets) out.push_back({oracle::to_mask(s.items), s.support});
    return out;
}

std::vector<Itemset> itemsets(const std::vector<MinedSet>& sets) {
    std::vector<Itemset> out;
    for (const auto& s : sets) out.push_back(s.items);
    return out;
}

SupportThreshold sup(std::size_t n) { return SupportThreshold::absolute(n); }

} // namespace

TEST_CASE("support thresholds") {
    CHECK(SupportThreshold::parse("2").resolve(4) == 2);
    CHECK(SupportThreshold::parse("50%").resolve(4) == 2);
    CHECK(SupportThreshold::parse("5%").resolve(5000) == 250);
    CHECK(SupportThreshold::parse("30%").resolve(10) == 3);
    CHECK(SupportThreshold::parse("1%").resolve(4) == 1);
    CHECK(SupportThreshold::relative(1.0).resolve(7) == 7);
    CHECK_THROWS_AS(SupportThreshold::parse("0").resolve(4), ConstraintError);
    CHECK_THROWS_AS(SupportThreshold::parse("0%"), ConstraintError);
    CHECK_THROWS_AS(SupportThreshold::parse("150%"), ConstraintError);
    CHECK_THROWS_AS(SupportThreshold::parse("-1"), ConstraintError);
    CHECK_THROWS_AS(SupportThreshold::parse("two"), ConstraintError);
    CHECK(parse_strategy("dfs") == Strategy::dfs);
    CHECK_THROWS_AS(parse_strategy("bfs"), ConstraintError);
}

TEST_CASE("K4 goldens for every strategy") {
    const auto k4 = fixtures::k4();
    for (auto s : strategies) {
        CAPTURE(static_cast<int>(s));
        const MineOptions opt{s, 1};

        const auto fi2 = mine_frequent(k4, sup(2), opt);
        CHECK(itemsets(fi2) == std::vector<Itemset>{items(k4, "a"), items(k4, "b"), items(k4, "c"),
                                                    items(k4, "a b"), items(k4, "a c"), items(k4, "b c")});
        CHECK(fi2[0].support == 3);
        CHECK(fi2[5].support == 2);
        CHECK(mine_frequent(k4, sup(5), opt).empty());
        CHECK(mine_frequent(k4, sup(1), opt).size() == 11);

        CHECK(mine_closed(k4, sup(2), opt).size() == 6);
        const auto fci1 = mine_closed(k4, sup(1), opt);
        CHECK(itemsets(fci1) == std::vector<Itemset>{items(k4, "a"), items(k4, "b"), items(k4, "c"),
                                                     items(k4, "a b"), items(k4, "a c"), items(k4, "b c"),
                                                     items(k4, "a b c"), items(k4, "a c d")});

        const auto fg1 = mine_generators(k4, sup(1), opt);
        CHECK(itemsets(fg1) == std::vector<Itemset>{items(k4, "a"), items(k4, "b"), items(k4, "c"),
                                                    items(k4, "d"), items(k4, "a b"), items(k4, "a c"),
                                                    items(k4, "b c"), items(k4, "a b c")});
        CHECK(mine_generators(k4, sup(2), opt).size() == 6);

        const auto mri2 = mine_minimal_rare(k4, sup(2), opt);
        CHECK(itemsets(mri2) == std::vector<Itemset>{items(k4, "d"), items(k4, "a b c")});
        const auto mri1 = mine_minimal_rare(k4, sup(1), opt);
        REQUIRE(mri1.size() == 1);
        CHECK(mri1[0].items == items(k4, "b d"));
        CHECK(mri1[0].support == 0);

        const auto classes1 = mine_equivalence_classes(k4, sup(1), opt);
        CHECK(classes1.size() == 8);
        bool found = false;
        for (const auto& c : classes1)
            if (c.closed_set == items(k4, "a c d")) {
                found = true;
                CHECK(c.generators == std::vector<Itemset>{items(k4, "d")});
                CHECK(c.support == 1);
            }
        CHECK(found);

        const auto classes2 = mine_equivalence_classes(k4, sup(2), opt);
        REQUIRE(classes2.size() == 6);
        for (const auto& c : classes2) CHECK(c.generators == std::vector<Itemset>(1, c.closed_set));
        CHECK(classes2[0].closed_set == items(k4, "a"));
        CHECK(classes2[3].closed_set == items(k4, "a b"));
    }
}

TEST_CASE("flags on mined sets") {
    const auto k4 = fixtures::k4();
    for (auto s : strategies) {
        for (const auto& m : mine_frequent(k4, sup(1), {s, 1})) {
            CHECK(m.is_closed == (closure(k4, m.items) == m.items));
            CHECK(m.support == support(k4, m.items));
        }
    }
    // An attribute every object has shares the support of the empty set.
    const BinaryContext full_col({"o1", "o2"}, {"x", "y"}, {{0, 1}, {0}});
    for (auto s : strategies) {
        const auto g = mine_generators(full_col, sup(1), {s, 1});
        REQUIRE(g.size() == 1);
        CHECK(g[0].items == Itemset{1});
        const auto classes = mine_equivalence_classes(full_col, sup(1), {s, 1});
        REQUIRE(classes.size() == 2);
        CHECK(classes[0].closed_set == Itemset{0});
        CHECK(classes[0].generators == std::vector<Itemset>{Itemset{}});
    }
}

TEST_CASE("edge-case contexts") {
    const BinaryContext empty({}, {"a", "b"}, {});
    const BinaryContext no_attributes({"o1"}, {}, {{}});
    for (auto s : strategies) {
        CHECK(mine_frequent(no_attributes, sup(1), {s, 1}).empty());
        CHECK(mine_frequent(empty, sup(1), {s, 1}).empty());
        // With no objects the empty set is already rare, so no non-empty set is minimal.
        CHECK(mine_minimal_rare(empty, sup(1), {s, 1}).empty());
        CHECK_THROWS_AS(mine_frequent(empty, SupportThreshold::relative(0.5), {s, 1}), ConstraintError);
        CHECK_THROWS_AS(mine_closed(fixtures::k4(), sup(0), {s, 1}), ConstraintError);
    }
}

TEST_CASE("oracle equivalence on random contexts") {
    std::mt19937 rng(2024);
    for (int round = 0; round < 120; ++round) {
        const double density = std::array{0.2, 0.5, 0.8}[round % 3];
        const auto ctx = oracle::random_context(rng, 1 + rng() % 12, 1 + rng() % 8, density);
        const oracle::Table t(ctx);
        for (std::size_t minsup = 1; minsup <= 3; ++minsup) {
            const auto fi = oracle::frequent(t, minsup);
            const auto fci = oracle::closed(t, minsup);
            const auto fg = oracle::generators(t, minsup);
            const auto mri = oracle::minimal_rare(t, minsup);
            for (auto s : strategies) {
                for (unsigned threads : {1U, 3U}) {
                    const MineOptions opt{s, threads};
                    CHECK(entries(mine_frequent(ctx, sup(minsup), opt)) == fi);
                    CHECK(entries(mine_closed(ctx, sup(minsup), opt)) == fci);
                    CHECK(entries(mine_generators(ctx, sup(minsup), opt)) == fg);
                    CHECK(entries(mine_minimal_rare(ctx, sup(minsup), opt)) == mri);
                }
            }
            const auto reference = mine_equivalence_classes(ctx, sup(minsup), {Strategy::levelwise, 1});
            CHECK(reference.size() == fci.size());
            for (const auto& c : reference)
                for (const auto& g : c.generators) {
                    CHECK(oracle::to_mask(closure(ctx, g)) == oracle::to_mask(c.closed_set));
                    CHECK(t.generator(oracle::to_mask(g)));
                }
            CHECK(mine_equivalence_classes(ctx, sup(minsup), {Strategy::dfs, 2}) == reference);
            CHECK(mine_equivalence_classes(ctx, sup(minsup), {Strategy::hybrid, 1}) == reference);
        }
    }
}
