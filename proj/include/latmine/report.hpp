#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latmine/miner.hpp"
#include "latmine/rules.hpp"

namespace latmine {

using Labels = std::vector<std::string>;

/// Labels of `items` joined by single spaces.
std::string render_itemset(const Itemset& items, const Labels& labels);

/// "a b (2)" per set.
std::string render_sets_text(const std::vector<MinedSet>& sets, const Labels& labels);
/// {"items":[...],"support":n,"closed":bool,"generator":bool} per line.
std::string render_sets_jsonl(const std::vector<MinedSet>& sets, const Labels& labels);

/// "a b => c (supp=1; conf=0.5000; lift=1.0000; conv=1.0000)"; an infinite
/// conviction prints as "inf", an undefined lift as "nan".
std::string render_rule_text(const AssociationRule& rule, const Labels& labels);
std::string render_rules_text(const std::vector<AssociationRule>& rules, const Labels& labels);

/// {"premise":[...],"consequent":[...],"support":n,"confidence":x,"lift":x,"conviction":x|null}
std::string render_rule_json(const AssociationRule& rule, const Labels& labels);
std::string render_rules_jsonl(const std::vector<AssociationRule>& rules, const Labels& labels);

/// Rules read back from JSON-lines, with the attribute vocabulary they use.
struct RuleTable {
    Labels attributes;
    std::vector<AssociationRule> rules;
};

/// Without a vocabulary, attribute ids follow the byte order of the labels
/// found in the input. With one, labels resolve against it (unknown labels
/// throw NameError). Malformed records throw ParseError.
RuleTable parse_rules_jsonl(std::string_view text, const Labels* vocabulary = nullptr);

} // namespace latmine
