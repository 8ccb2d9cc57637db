#include "latmine/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"
#include "latmine/errors.hpp"

namespace latmine {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string fixed4(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

ordered label_array(const Itemset& items, const Labels& labels) {
    ordered arr = ordered::array();
    for (auto a : items) arr.push_back(labels[a]);
    return arr;
}

ordered finite_or_null(double v) { return std::isfinite(v) ? ordered(v) : ordered(nullptr); }

} // namespace

std::string render_itemset(const Itemset& items, const Labels& labels) {
    std::string out;
    for (auto a : items) {
        if (!out.empty()) out += ' ';
        out += labels[a];
    }
    return out;
}

std::string render_sets_text(const std::vector<MinedSet>& sets, const Labels& labels) {
    std::string out;
    for (const auto& m : sets) out += render_itemset(m.items, labels) + " (" + std::to_string(m.support) + ")\n";
    return out;
}

std::string render_sets_jsonl(const std::vector<MinedSet>& sets, const Labels& labels) {
    std::string out;
    for (const auto& m : sets) {
        ordered rec = {{"items", label_array(m.items, labels)},
                    {"support", m.support},
                    {"closed", m.is_closed},
                    {"generator", m.is_generator}};
        out += rec.dump() + "\n";
    }
    return out;
}

std::string render_rule_text(const AssociationRule& rule, const Labels& labels) {
    std::string out = render_itemset(rule.premise, labels);
    out += out.empty() ? "=> " : " => ";
    out += render_itemset(rule.consequent, labels);
    out += " (supp=" + std::to_string(rule.support) + "; conf=" + fixed4(rule.confidence) +
           "; lift=" + fixed4(rule.lift) + "; conv=" + fixed4(rule.conviction) + ")";
    return out;
}

std::string render_rules_text(const std::vector<AssociationRule>& rules, const Labels& labels) {
    std::string out;
    for (const auto& r : rules) out += render_rule_text(r, labels) + "\n";
    return out;
}

std::string render_rule_json(const AssociationRule& rule, const Labels& labels) {
    ordered rec = {{"premise", label_array(rule.premise, labels)},
                {"consequent", label_array(rule.consequent, labels)},
                {"support", rule.support},
                {"confidence", rule.confidence},
                {"lift", finite_or_null(rule.lift)},
                {"conviction", finite_or_null(rule.conviction)}};
    return rec.dump();
}

std::string render_rules_jsonl(const std::vector<AssociationRule>& rules, const Labels& labels) {
    std::string out;
    for (const auto& r : rules) out += render_rule_json(r, labels) + "\n";
    return out;
}

RuleTable parse_rules_jsonl(std::string_view text, const Labels* vocabulary) {
    std::vector<std::pair<std::size_t, json>> records;
    std::size_t lineno = 0, start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(start, nl - start);
        start = nl + 1;
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        try {
            records.emplace_back(lineno, json::parse(line));
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON rule record: ") + e.what(), lineno);
        }
    }

    RuleTable table;
    std::map<std::string, AttrId> ids;
    if (vocabulary) {
        table.attributes = *vocabulary;
        for (std::size_t i = 0; i < vocabulary->size(); ++i) ids.emplace((*vocabulary)[i], static_cast<AttrId>(i));
    } else {
        std::set<std::string> seen;
        for (const auto& [no, rec] : records)
            for (const char* side : {"premise", "consequent"})
                if (rec.contains(side) && rec[side].is_array())
                    for (const auto& item : rec[side])
                        if (item.is_string()) seen.insert(item.get<std::string>());
        for (const auto& label : seen) {
            ids.emplace(label, static_cast<AttrId>(table.attributes.size()));
            table.attributes.push_back(label);
        }
    }

    auto items_of = [&](const json& rec, const char* side, std::size_t no) {
        if (!rec.contains(side) || !rec[side].is_array())
            throw ParseError(std::string("rule record lacks '") + side + "' array", no);
        std::vector<AttrId> out;
        for (const auto& item : rec[side]) {
            if (!item.is_string()) throw ParseError("rule items must be strings", no);
            auto it = ids.find(item.get<std::string>());
            if (it == ids.end()) throw NameError("unknown attribute '" + item.get<std::string>() + "'");
            out.push_back(it->second);
        }
        return Itemset(std::move(out));
    };
    auto number_of = [&](const json& rec, const char* field, std::size_t no, double if_null) {
        if (!rec.contains(field)) throw ParseError(std::string("rule record lacks '") + field + "'", no);
        const auto& v = rec[field];
        if (v.is_null()) return if_null;
        if (!v.is_number()) throw ParseError(std::string("'") + field + "' must be a number", no);
        return v.get<double>();
    };

    for (const auto& [no, rec] : records) {
        if (!rec.is_object()) throw ParseError("rule record must be a JSON object", no);
        AssociationRule r;
        r.premise = items_of(rec, "premise", no);
        r.consequent = items_of(rec, "consequent", no);
        if (!rec.contains("support") || !rec["support"].is_number_unsigned())
            throw ParseError("'support' must be a non-negative integer", no);
        r.support = rec["support"].get<std::size_t>();
        r.confidence = number_of(rec, "confidence", no, std::numeric_limits<double>::quiet_NaN());
        r.lift = number_of(rec, "lift", no, std::numeric_limits<double>::quiet_NaN());
        r.conviction = number_of(rec, "conviction", no, std::numeric_limits<double>::infinity());
        table.rules.push_back(std::move(r));
    }
    return table;
}

} // namespace latmine
