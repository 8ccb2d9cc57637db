#include <limits>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "latmine/errors.hpp"
#include "latmine/postprocess.hpp"
#include "oracle.hpp"

using namespace latmine;
using fixtures::items;

namespace {

SupportThreshold sup(std::size_t n) { return SupportThreshold::absolute(n); }

bool same_list(const std::vector<AssociationRule>& a, const std::vector<AssociationRule>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].premise != b[i].premise || a[i].consequent != b[i].consequent) return false;
    return true;
}

} // namespace

TEST_CASE("filter_rules") {
    const auto k4 = fixtures::k4();
    const auto mnr = mnr_rules(k4, sup(1), 0.3, false);

    FilterSpec single;
    single.premise_len = LengthRange{1, 1};
    const auto singles = filter_rules(mnr, single);
    CHECK_FALSE(singles.empty());
    for (const auto& r : singles) CHECK(r.premise.size() == 1);
    std::size_t expected = 0;
    for (const auto& r : mnr) expected += r.premise.size() == 1;
    CHECK(singles.size() == expected);

    FilterSpec with_d;
    with_d.must_contain = items(k4, "d");
    const auto rare = rare_rules(k4, sup(2));
    const auto kept = filter_rules(rare, with_d);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].premise == items(k4, "d"));

    CHECK(same_list(filter_rules(mnr, FilterSpec{}), mnr));

    FilterSpec consequent_d;
    consequent_d.must_contain = items(k4, "d");
    consequent_d.side = RuleSide::consequent;
    for (const auto& r : filter_rules(mnr, consequent_d)) CHECK(r.consequent.contains(3));
    consequent_d.side = RuleSide::premise;
    CHECK(filter_rules(rare, consequent_d).size() == 1);

    FilterSpec no_a;
    no_a.must_not_contain = items(k4, "a");
    for (const auto& r : filter_rules(mnr, no_a)) CHECK_FALSE((r.premise | r.consequent).contains(0));

    FilterSpec clash;
    clash.must_contain = items(k4, "a");
    clash.must_not_contain = items(k4, "a b");
    CHECK_THROWS_AS(filter_rules(mnr, clash), ConstraintError);

    FilterSpec inverted;
    inverted.consequent_len = LengthRange{3, 1};
    CHECK_THROWS_AS(filter_rules(mnr, inverted), ConstraintError);
}

TEST_CASE("filter_rules is a sub-list and idempotent") {
    std::mt19937 rng(8);
    for (int round = 0; round < 30; ++round) {
        const auto ctx = oracle::random_context(rng, 3 + rng() % 8, 2 + rng() % 5, 0.6);
        const auto rules = all_rules(ctx, sup(1), 0.3);
        FilterSpec spec;
        spec.premise_len = LengthRange{1, 1 + rng() % 2};
        spec.must_contain = Itemset{static_cast<AttrId>(rng() % ctx.attribute_count())};
        spec.side = RuleSide::either;
        const auto once = filter_rules(rules, spec);
        CHECK(same_list(filter_rules(once, spec), once));
        std::size_t cursor = 0;
        for (const auto& r : once) {
            while (cursor < rules.size() && !(rules[cursor] == r)) ++cursor;
            CHECK(cursor < rules.size());
        }
    }
}

TEST_CASE("top_k") {
    const auto k4 = fixtures::k4();
    const std::vector<AssociationRule> rules{make_rule(k4, items(k4, "a"), items(k4, "c")),
                                             make_rule(k4, items(k4, "d"), items(k4, "a c")),
                                             make_rule(k4, items(k4, "a"), items(k4, "b"))};
    CHECK(top_k(rules, Measure::confidence, 0).empty());

    const auto best = top_k(rules, Measure::confidence, 2);
    REQUIRE(best.size() == 2);
    CHECK(best[0].premise == items(k4, "d"));
    CHECK(best[1].consequent == items(k4, "b"));

    const auto all = top_k(rules, Measure::confidence, 10);
    REQUIRE(all.size() == 3);
    CHECK(all[2].consequent == items(k4, "c"));

    // Infinite conviction beats everything finite.
    CHECK(top_k(rules, Measure::conviction, 1)[0].premise == items(k4, "d"));
    CHECK(top_k(rules, Measure::support, 1)[0].consequent == items(k4, "b"));
    CHECK(top_k(rules, Measure::lift, 1)[0].premise == items(k4, "d"));

    auto with_nan = rules;
    with_nan.push_back(rules[0]);
    with_nan.back().lift = std::numeric_limits<double>::quiet_NaN();
    with_nan.back().premise = items(k4, "b");
    CHECK(top_k(with_nan, Measure::lift, 4).back().premise == items(k4, "b"));

    CHECK(parse_measure("lift") == Measure::lift);
    CHECK_THROWS_AS(parse_measure("leverage"), ConstraintError);
}

TEST_CASE("top_k is stable under repetition") {
    std::mt19937 rng(12);
    for (int round = 0; round < 30; ++round) {
        const auto ctx = oracle::random_context(rng, 3 + rng() % 8, 2 + rng() % 5, 0.6);
        const auto rules = all_rules(ctx, sup(1), 0.2);
        for (auto m : {Measure::support, Measure::confidence, Measure::lift, Measure::conviction}) {
            const std::size_t k = rng() % (rules.size() + 2);
            const auto once = top_k(rules, m, k);
            CHECK(once.size() == std::min(k, rules.size()));
            CHECK(same_list(top_k(once, m, k), once));
        }
    }
}

TEST_CASE("colorize") {
    const std::set<std::string> c{"c"};
    CHECK(colorize("a b => c", c, false) == "a b => c");
    CHECK(colorize("a b => c", c) == "a b => \x1b[31mc\x1b[0m");
    CHECK(colorize("ab => b", {"a"}) == "ab => b");
    CHECK(colorize("CLASS closed={a c} supp=1", {"a", "c"}) ==
          "CLASS closed={\x1b[31ma\x1b[0m \x1b[31mc\x1b[0m} supp=1");
    CHECK(colorize("{a}", {"a"}) == "{\x1b[31ma\x1b[0m}");

    const std::string text = "a b => c (supp=1; conf=0.5000)\nc d => a\n";
    const auto colored = colorize(text, {"a", "d"});
    CHECK(colored != text);
    CHECK(strip_colors(colored) == text);
    CHECK(strip_colors(text) == text);
}
