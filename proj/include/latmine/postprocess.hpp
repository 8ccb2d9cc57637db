#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "latmine/rules.hpp"

namespace latmine {

struct LengthRange {
    std::size_t min = 0;
    std::size_t max = static_cast<std::size_t>(-1);
};

enum class RuleSide { premise, consequent, either };

struct FilterSpec {
    std::optional<LengthRange> premise_len;
    std::optional<LengthRange> consequent_len;
    Itemset must_contain;
    Itemset must_not_contain;
    RuleSide side = RuleSide::either;
};

/// Rules satisfying every present clause, in input order. Overlapping
/// contain sets or an inverted length range throw ConstraintError.
///
/// must_contain: every listed attribute is on the chosen side (with
/// `either`, in premise or consequent). must_not_contain: none of them is.
std::vector<AssociationRule> filter_rules(const std::vector<AssociationRule>& rules, const FilterSpec& spec);

enum class Measure { support, confidence, lift, conviction };

Measure parse_measure(std::string_view name);

/// The k best rules by `measure`; ties by support desc, then premise and
/// consequent lexicographic. Infinite conviction beats any finite value and
/// an undefined (NaN) value ranks last.
std::vector<AssociationRule> top_k(const std::vector<AssociationRule>& rules, Measure measure, std::size_t k);

/// Wraps every whitespace-delimited token equal to a target attribute in
/// ESC[31m ... ESC[0m. A token may carry a prefix ending in '{' (as in
/// "closed={a") or a trailing '}'.
/// Disabled mode returns the input unchanged.
std::string colorize(std::string_view text, const std::set<std::string>& targets, bool enabled = true);

/// Removes the SGR sequences that colorize inserts.
std::string strip_colors(std::string_view text);

} // namespace latmine
