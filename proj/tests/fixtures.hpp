#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "latmine/context.hpp"
#include "latmine/rules.hpp"

namespace fixtures {

// o1={a,b,c}, o2={a,b}, o3={a,c,d}, o4={b,c}
inline latmine::BinaryContext k4() {
    return latmine::BinaryContext({"o1", "o2", "o3", "o4"}, {"a", "b", "c", "d"},
                                  {{0, 1, 2}, {0, 1}, {0, 2, 3}, {1, 2}});
}

inline const char* k4_tab = "a b c\na b\na c d\nb c\n";

/// Space-separated attribute labels to an itemset of ctx.
inline latmine::Itemset items(const latmine::BinaryContext& ctx, const std::string& labels) {
    std::istringstream in(labels);
    std::vector<latmine::AttrId> ids;
    for (std::string l; in >> l;) ids.push_back(*ctx.find_attribute(l));
    return latmine::Itemset(std::move(ids));
}

inline const latmine::AssociationRule* find_rule(const std::vector<latmine::AssociationRule>& rules,
                                                 const latmine::Itemset& premise,
                                                 const latmine::Itemset& consequent) {
    for (const auto& r : rules)
        if (r.premise == premise && r.consequent == consequent) return &r;
    return nullptr;
}

} // namespace fixtures
