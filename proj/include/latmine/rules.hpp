#pragma once

#include <cstddef>
#include <vector>

#include "latmine/context.hpp"
#include "latmine/miner.hpp"

namespace latmine {

struct Measures {
    double confidence = 0.0;
    double lift = 0.0;
    double conviction = 0.0; ///< +inf when confidence is 1
};

/// conf = s_xy/s_x, lift = s_xy*N/(s_x*s_y), conviction = (1 - s_y/N)/(1 - conf).
/// A premise with zero support throws ConstraintError.
Measures measures(std::size_t object_count, std::size_t supp_xy, std::size_t supp_x, std::size_t supp_y);

struct AssociationRule {
    Itemset premise;
    Itemset consequent;
    std::size_t support = 0; ///< support of premise | consequent
    double confidence = 0.0;
    double lift = 0.0;
    double conviction = 0.0;

    friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

/// Builds premise -> consequent with measures taken from the context.
AssociationRule make_rule(const BinaryContext& ctx, const Itemset& premise, const Itemset& consequent);

/// Order used for every emitted rule list: support desc, confidence desc,
/// premise then consequent lexicographic.
bool rule_order(const AssociationRule& a, const AssociationRule& b);
void sort_rules(std::vector<AssociationRule>& rules);

/// Every X -> Z\X over frequent Z with |Z| >= 2 and confidence >= minconf.
std::vector<AssociationRule> all_rules(const BinaryContext& ctx, SupportThreshold minsup, double minconf,
                                       MineOptions options = {});

/// Exact rules g -> closure(g)\g for frequent generators with a larger closure.
std::vector<AssociationRule> generic_basis(const BinaryContext& ctx, SupportThreshold minsup,
                                           MineOptions options = {});

/// Generic basis plus approximate rules g -> f\g for frequent closed f that
/// strictly contain closure(g). With `reduced`, f ranges only over the
/// covers of closure(g) among the frequent closed sets.
std::vector<AssociationRule> mnr_rules(const BinaryContext& ctx, SupportThreshold minsup, double minconf,
                                       bool reduced, MineOptions options = {});

/// Exact rules from minimal rare generators with nonzero support.
std::vector<AssociationRule> rare_rules(const BinaryContext& ctx, SupportThreshold minsup,
                                        MineOptions options = {});

/// X -> Y\X for frequent closed X strictly inside frequent closed Y.
std::vector<AssociationRule> closed_rules(const BinaryContext& ctx, SupportThreshold minsup, double minconf,
                                          MineOptions options = {});

struct ImplicationOptions {
    std::size_t max_attributes = 20;
};

/// Duquenne-Guigues basis, one implication P -> closure(P)\P per
/// pseudo-closed P, sorted by (|P|, lexicographic). Ignores minsup. A premise
/// held by no object yields confidence 1 and an undefined (NaN) lift.
/// Throws ResourceError above `max_attributes`.
std::vector<AssociationRule> duquenne_guigues(const BinaryContext& ctx, ImplicationOptions options = {});

/// Smallest superset of `items` closed under every implication in `basis`.
Itemset implication_closure(const std::vector<AssociationRule>& basis, const Itemset& items);

} // namespace latmine
