#include "latmine/toolbox.hpp"

#include <cmath>
#include <random>

#include "latmine/errors.hpp"
#include "latmine/report.hpp"

namespace latmine {

BinaryContext random_context(const GenSpec& spec) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0))
        throw ConstraintError("density must lie in [0, 1]");

    std::mt19937_64 rng(spec.seed);
    constexpr double scale = 1.0 / 9007199254740992.0; // 2^-53

    std::vector<std::string> objects, attributes;
    for (std::size_t i = 0; i < spec.rows; ++i) objects.push_back("o" + std::to_string(i + 1));
    for (std::size_t j = 0; j < spec.cols; ++j) attributes.push_back("a" + std::to_string(j + 1));

    std::vector<Itemset> rows;
    rows.reserve(spec.rows);
    for (std::size_t i = 0; i < spec.rows; ++i) {
        std::vector<AttrId> row;
        for (std::size_t j = 0; j < spec.cols; ++j) {
            const double u = static_cast<double>(rng() >> 11) * scale;
            if (u < spec.density) row.push_back(static_cast<AttrId>(j));
        }
        rows.push_back(Itemset::from_sorted(std::move(row)));
    }
    return BinaryContext(std::move(objects), std::move(attributes), rows);
}

std::string render_equivalence_classes(const std::vector<EquivalenceClass>& classes,
                                       const std::vector<std::string>& attribute_labels) {
    std::string out;
    for (const auto& c : classes) {
        out += "CLASS closed={" + render_itemset(c.closed_set, attribute_labels) +
               "} supp=" + std::to_string(c.support) + "\n";
        for (const auto& g : c.generators) out += "  gen: {" + render_itemset(g, attribute_labels) + "}\n";
    }
    return out;
}

} // namespace latmine
