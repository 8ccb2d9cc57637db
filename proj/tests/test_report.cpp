#include <cmath>
#include <limits>

#include "json.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "latmine/errors.hpp"
#include "latmine/report.hpp"

using namespace latmine;
using fixtures::items;

TEST_CASE("rule text rendering") {
    const auto k4 = fixtures::k4();
    const auto& labels = k4.attribute_labels();
    CHECK(render_rule_text(make_rule(k4, items(k4, "a"), items(k4, "b")), labels) ==
          "a => b (supp=2; conf=0.6667; lift=0.8889; conv=0.7500)");
    CHECK(render_rule_text(make_rule(k4, items(k4, "d"), items(k4, "a c")), labels) ==
          "d => a c (supp=1; conf=1.0000; lift=2.0000; conv=inf)");
    CHECK(render_rule_text(make_rule(k4, items(k4, "a b"), items(k4, "c")), labels) ==
          "a b => c (supp=1; conf=0.5000; lift=0.6667; conv=0.5000)");

    AssociationRule empty_premise{{}, items(k4, "a"), 3, 0.75, 1.0, 1.0};
    CHECK(render_rule_text(empty_premise, labels) == "=> a (supp=3; conf=0.7500; lift=1.0000; conv=1.0000)");
}

TEST_CASE("set rendering") {
    const auto k4 = fixtures::k4();
    const std::vector<MinedSet> sets{{items(k4, "a"), 3, true, true}, {items(k4, "a c d"), 1, true, false}};
    CHECK(render_sets_text(sets, k4.attribute_labels()) == "a (3)\na c d (1)\n");
    CHECK(render_sets_jsonl(sets, k4.attribute_labels()) ==
          "{\"items\":[\"a\"],\"support\":3,\"closed\":true,\"generator\":true}\n"
          "{\"items\":[\"a\",\"c\",\"d\"],\"support\":1,\"closed\":true,\"generator\":false}\n");
}

TEST_CASE("rule JSON round trip") {
    const auto k4 = fixtures::k4();
    const auto& labels = k4.attribute_labels();
    const auto rules = mnr_rules(k4, SupportThreshold::absolute(1), 0.3, false);
    const auto text = render_rules_jsonl(rules, labels);

    const auto first = nlohmann::json::parse(text.substr(0, text.find('\n')));
    CHECK(first.contains("premise"));
    CHECK(first.contains("conviction"));

    const auto table = parse_rules_jsonl(text, &labels);
    CHECK(table.attributes == labels);
    CHECK(table.rules == rules);
    CHECK(render_rules_jsonl(table.rules, table.attributes) == text);

    // Without a vocabulary, ids follow sorted label order.
    const auto free = parse_rules_jsonl("{\"premise\":[\"z\"],\"consequent\":[\"b\"],\"support\":1,"
                                        "\"confidence\":1,\"lift\":null,\"conviction\":null}\n");
    CHECK(free.attributes == Labels{"b", "z"});
    REQUIRE(free.rules.size() == 1);
    CHECK(free.rules[0].premise == Itemset{1});
    CHECK(std::isnan(free.rules[0].lift));
    CHECK(free.rules[0].conviction == std::numeric_limits<double>::infinity());

    CHECK_THROWS_AS(parse_rules_jsonl("{not json}\n"), ParseError);
    CHECK_THROWS_AS(parse_rules_jsonl("{\"premise\":[\"a\"]}\n"), ParseError);
    const Labels only_a{"a"};
    CHECK_THROWS_AS(parse_rules_jsonl(text, &only_a), NameError);
}
