#include "latmine/postprocess.hpp"

#include <algorithm>
#include <cmath>

#include "latmine/errors.hpp"

namespace latmine {

namespace {

bool in_range(std::size_t n, const std::optional<LengthRange>& range) {
    return !range || (n >= range->min && n <= range->max);
}

void check_range(const std::optional<LengthRange>& range, const char* what) {
    if (range && range->min > range->max)
        throw ConstraintError(std::string(what) + " length range has min > max");
}

double measure_value(const AssociationRule& r, Measure m) {
    switch (m) {
    case Measure::support: return static_cast<double>(r.support);
    case Measure::confidence: return r.confidence;
    case Measure::lift: return r.lift;
    case Measure::conviction: return r.conviction;
    }
    return 0.0;
}

constexpr std::string_view red = "\x1b[31m";
constexpr std::string_view reset = "\x1b[0m";

} // namespace

std::vector<AssociationRule> filter_rules(const std::vector<AssociationRule>& rules, const FilterSpec& spec) {
    check_range(spec.premise_len, "premise");
    check_range(spec.consequent_len, "consequent");
    if (!(spec.must_contain & spec.must_not_contain).empty())
        throw ConstraintError("an attribute cannot be both required and excluded");

    std::vector<AssociationRule> out;
    for (const auto& r : rules) {
        if (!in_range(r.premise.size(), spec.premise_len) || !in_range(r.consequent.size(), spec.consequent_len))
            continue;
        auto on_side = [&](AttrId a) {
            switch (spec.side) {
            case RuleSide::premise: return r.premise.contains(a);
            case RuleSide::consequent: return r.consequent.contains(a);
            case RuleSide::either: break;
            }
            return r.premise.contains(a) || r.consequent.contains(a);
        };
        if (!std::all_of(spec.must_contain.begin(), spec.must_contain.end(), on_side)) continue;
        if (std::any_of(spec.must_not_contain.begin(), spec.must_not_contain.end(), on_side)) continue;
        out.push_back(r);
    }
    return out;
}

Measure parse_measure(std::string_view name) {
    if (name == "support") return Measure::support;
    if (name == "confidence") return Measure::confidence;
    if (name == "lift") return Measure::lift;
    if (name == "conviction") return Measure::conviction;
    throw ConstraintError("unknown measure '" + std::string(name) + "'");
}

std::vector<AssociationRule> top_k(const std::vector<AssociationRule>& rules, Measure measure, std::size_t k) {
    std::vector<AssociationRule> out = rules;
    auto better = [measure](const AssociationRule& a, const AssociationRule& b) {
        const double va = measure_value(a, measure), vb = measure_value(b, measure);
        const bool na = std::isnan(va), nb = std::isnan(vb);
        if (na != nb) return nb;
        if (!na && va != vb) return va > vb;
        if (a.support != b.support) return a.support > b.support;
        if (a.premise != b.premise) return a.premise < b.premise;
        return a.consequent < b.consequent;
    };
    const std::size_t keep = std::min(k, out.size());
    std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(keep), out.end(), better);
    out.resize(keep);
    return out;
}

std::string colorize(std::string_view text, const std::set<std::string>& targets, bool enabled) {
    if (!enabled || targets.empty()) return std::string(text);
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (pos < text.size()) {
        if (is_ws(text[pos])) {
            out += text[pos++];
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_ws(text[end])) ++end;
        std::string_view token = text.substr(pos, end - pos);
        std::string_view lead, trail;
        if (const auto brace = token.find('{'); brace != std::string_view::npos && brace + 1 < token.size()) {
            lead = token.substr(0, brace + 1);
            token.remove_prefix(brace + 1);
        }
        if (token.size() > 1 && token.back() == '}') {
            trail = token.substr(token.size() - 1);
            token.remove_suffix(1);
        }
        if (targets.contains(std::string(token))) {
            out += lead;
            out += red;
            out += token;
            out += reset;
            out += trail;
        } else {
            out += text.substr(pos, end - pos);
        }
        pos = end;
    }
    return out;
}

std::string strip_colors(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (text.substr(i, red.size()) == red) {
            i += red.size();
        } else if (text.substr(i, reset.size()) == reset) {
            i += reset.size();
        } else {
            out += text[i++];
        }
    }
    return out;
}

} // namespace latmine
