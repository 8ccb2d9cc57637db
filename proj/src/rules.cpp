#include "latmine/rules.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>

#include "latmine/errors.hpp"

namespace latmine {

Measures measures(std::size_t object_count, std::size_t supp_xy, std::size_t supp_x, std::size_t supp_y) {
    if (supp_x == 0) throw ConstraintError("rule premise must have nonzero support");
    if (supp_y == 0) throw ConstraintError("rule consequent must have nonzero support");
    if (supp_xy > supp_x || supp_xy > supp_y || supp_x > object_count || supp_y > object_count)
        throw ConstraintError("inconsistent supports for rule measures");
    const double n = static_cast<double>(object_count);
    const double xy = static_cast<double>(supp_xy);
    const double x = static_cast<double>(supp_x);
    const double y = static_cast<double>(supp_y);
    Measures m;
    m.confidence = xy / x;
    m.lift = (xy * n) / (x * y);
    m.conviction = supp_xy == supp_x ? std::numeric_limits<double>::infinity() : (1.0 - y / n) / (1.0 - m.confidence);
    return m;
}

AssociationRule make_rule(const BinaryContext& ctx, const Itemset& premise, const Itemset& consequent) {
    const std::size_t sxy = support(ctx, premise | consequent);
    const auto m = measures(ctx.object_count(), sxy, support(ctx, premise), support(ctx, consequent));
    return {premise, consequent, sxy, m.confidence, m.lift, m.conviction};
}

bool rule_order(const AssociationRule& a, const AssociationRule& b) {
    if (a.support != b.support) return a.support > b.support;
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    if (a.premise != b.premise) return a.premise < b.premise;
    return a.consequent < b.consequent;
}

void sort_rules(std::vector<AssociationRule>& rules) { std::sort(rules.begin(), rules.end(), rule_order); }

namespace {

void check_minconf(double minconf) {
    if (!(minconf > 0.0 && minconf <= 1.0))
        throw ConstraintError("minconf must lie in (0, 1], got " + std::to_string(minconf));
}

using SupportMap = std::unordered_map<Itemset, std::size_t, IdSetHash>;

AssociationRule rule_from_supports(std::size_t n, Itemset premise, Itemset consequent, std::size_t sxy,
                                   std::size_t sx, std::size_t sy) {
    const auto m = measures(n, sxy, sx, sy);
    return {std::move(premise), std::move(consequent), sxy, m.confidence, m.lift, m.conviction};
}

template <class Task>
void parallel_for(std::size_t n, unsigned threads, Task&& task) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) task(i);
        });
}

} // namespace

std::vector<AssociationRule> all_rules(const BinaryContext& ctx, SupportThreshold minsup, double minconf,
                                       MineOptions options) {
    check_minconf(minconf);
    const auto frequent = mine_frequent(ctx, minsup, options);
    SupportMap supports;
    for (const auto& m : frequent) supports.emplace(m.items, m.support);
    const std::size_t n = ctx.object_count();

    for (const auto& z : frequent)
        if (z.items.size() > 32)
            throw ResourceError("frequent itemset of size " + std::to_string(z.items.size()) + " has too many rules");

    std::vector<std::vector<AssociationRule>> per_set(frequent.size());
    parallel_for(frequent.size(), options.threads, [&](std::size_t i) {
        const auto& z = frequent[i];
        const std::size_t k = z.items.size();
        if (k < 2) return;
        const std::uint64_t full = (std::uint64_t{1} << k) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            std::vector<AttrId> lhs, rhs;
            for (std::size_t b = 0; b < k; ++b) ((mask >> b) & 1U ? lhs : rhs).push_back(z.items[b]);
            auto premise = Itemset::from_sorted(std::move(lhs));
            const std::size_t sx = supports.at(premise);
            if (static_cast<double>(z.support) / static_cast<double>(sx) < minconf) continue;
            auto consequent = Itemset::from_sorted(std::move(rhs));
            const std::size_t sy = supports.at(consequent);
            per_set[i].push_back(rule_from_supports(n, std::move(premise), std::move(consequent), z.support, sx, sy));
        }
    });

    std::vector<AssociationRule> rules;
    for (auto& v : per_set) rules.insert(rules.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    sort_rules(rules);
    return rules;
}

std::vector<AssociationRule> generic_basis(const BinaryContext& ctx, SupportThreshold minsup, MineOptions options) {
    std::vector<AssociationRule> rules;
    for (const auto& g : mine_generators(ctx, minsup, options)) {
        const Itemset closed = closure(ctx, g.items);
        if (closed == g.items) continue;
        const Itemset consequent = closed - g.items;
        rules.push_back(rule_from_supports(ctx.object_count(), g.items, consequent, g.support, g.support,
                                           support(ctx, consequent)));
    }
    sort_rules(rules);
    return rules;
}

std::vector<AssociationRule> mnr_rules(const BinaryContext& ctx, SupportThreshold minsup, double minconf, bool reduced,
                                       MineOptions options) {
    check_minconf(minconf);
    const auto closed = mine_closed(ctx, minsup, options);
    const auto generators = mine_generators(ctx, minsup, options);
    const std::size_t n = ctx.object_count();

    std::unordered_map<Itemset, std::size_t, IdSetHash> index;
    for (std::size_t i = 0; i < closed.size(); ++i) index.emplace(closed[i].items, i);

    // Strict frequent-closed supersets of each closed set, and the minimal
    // ones among them (covers).
    std::vector<std::vector<std::size_t>> above(closed.size());
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = 0; j < closed.size(); ++j)
            if (closed[i].items.is_proper_subset_of(closed[j].items)) above[i].push_back(j);
    auto covers = [&](std::size_t i) {
        std::vector<std::size_t> out;
        for (auto j : above[i]) {
            bool minimal = true;
            for (auto k : above[i])
                if (k != j && closed[k].items.is_proper_subset_of(closed[j].items)) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(j);
        }
        return out;
    };

    std::vector<AssociationRule> rules;
    for (const auto& g : generators) {
        const Itemset cg = closure(ctx, g.items);
        if (cg != g.items) {
            const Itemset consequent = cg - g.items;
            rules.push_back(rule_from_supports(n, g.items, consequent, g.support, g.support, support(ctx, consequent)));
        }
        const std::size_t ci = index.at(cg);
        for (auto j : reduced ? covers(ci) : above[ci]) {
            const auto& f = closed[j];
            if (static_cast<double>(f.support) / static_cast<double>(g.support) < minconf) continue;
            const Itemset consequent = f.items - g.items;
            rules.push_back(rule_from_supports(n, g.items, consequent, f.support, g.support, support(ctx, consequent)));
        }
    }
    sort_rules(rules);
    return rules;
}

std::vector<AssociationRule> rare_rules(const BinaryContext& ctx, SupportThreshold minsup, MineOptions options) {
    std::vector<AssociationRule> rules;
    for (const auto& g : mine_minimal_rare(ctx, minsup, options)) {
        if (g.support == 0 || !g.is_generator) continue;
        const Itemset closed = closure(ctx, g.items);
        if (closed == g.items) continue;
        const Itemset consequent = closed - g.items;
        rules.push_back(rule_from_supports(ctx.object_count(), g.items, consequent, g.support, g.support,
                                           support(ctx, consequent)));
    }
    sort_rules(rules);
    return rules;
}

std::vector<AssociationRule> closed_rules(const BinaryContext& ctx, SupportThreshold minsup, double minconf,
                                          MineOptions options) {
    check_minconf(minconf);
    const auto closed = mine_closed(ctx, minsup, options);
    const std::size_t n = ctx.object_count();
    std::vector<AssociationRule> rules;
    for (const auto& x : closed)
        for (const auto& y : closed) {
            if (!x.items.is_proper_subset_of(y.items)) continue;
            if (static_cast<double>(y.support) / static_cast<double>(x.support) < minconf) continue;
            const Itemset consequent = y.items - x.items;
            rules.push_back(rule_from_supports(n, x.items, consequent, y.support, x.support, support(ctx, consequent)));
        }
    sort_rules(rules);
    return rules;
}

std::vector<AssociationRule> duquenne_guigues(const BinaryContext& ctx, ImplicationOptions options) {
    const std::size_t m = ctx.attribute_count();
    if (m > options.max_attributes)
        throw ResourceError("Duquenne-Guigues basis limited to " + std::to_string(options.max_attributes) +
                            " attributes, context has " + std::to_string(m));

    struct Implication {
        Bitset premise;
        Bitset conclusion; // full closure of the premise
    };
    std::vector<Implication> basis;

    auto close_under_basis = [&](Bitset x) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& imp : basis)
                if (imp.premise.is_subset_of(x) && !imp.conclusion.is_subset_of(x)) {
                    x |= imp.conclusion;
                    changed = true;
                }
        }
        return x;
    };
    auto context_closure = [&](const Bitset& x) { return to_bits(closure(ctx, attributes_of(x)), m); };

    // Next closure in lectic order over the sets closed under the basis
    // found so far; each one is either an intent or a pseudo-intent.
    Bitset current(m);
    const Bitset full(m, true);
    while (true) {
        Bitset closed = context_closure(current);
        if (closed != current) basis.push_back({current, closed});
        if (current == full) break;

        bool advanced = false;
        for (std::size_t i = m; i-- > 0;) {
            if (current.test(i)) {
                current.reset(i);
                continue;
            }
            Bitset candidate = current;
            candidate.set(i);
            candidate = close_under_basis(candidate);
            // Accept if nothing below i was added.
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                if (candidate.test(k) && !current.test(k)) ok = false;
            if (ok) {
                current = std::move(candidate);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }

    const std::size_t n = ctx.object_count();
    std::vector<AssociationRule> rules;
    for (const auto& imp : basis) {
        Itemset premise = attributes_of(imp.premise);
        Itemset consequent = attributes_of(imp.conclusion) - premise;
        const std::size_t sp = support(ctx, premise);
        if (sp > 0) {
            rules.push_back(rule_from_supports(n, std::move(premise), consequent, sp, sp, support(ctx, consequent)));
        } else {
            rules.push_back({std::move(premise), std::move(consequent), 0, 1.0,
                             std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity()});
        }
    }
    std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
        if (a.premise.size() != b.premise.size()) return a.premise.size() < b.premise.size();
        return a.premise < b.premise;
    });
    return rules;
}

Itemset implication_closure(const std::vector<AssociationRule>& basis, const Itemset& items) {
    Itemset x = items;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : basis)
            if (r.premise.is_subset_of(x) && !r.consequent.is_subset_of(x)) {
                x = x | r.consequent;
                changed = true;
            }
    }
    return x;
}

} // namespace latmine
