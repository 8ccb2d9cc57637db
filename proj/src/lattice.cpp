#include "latmine/lattice.hpp"

#include <algorithm>

#include "json.hpp"
#include "latmine/errors.hpp"

namespace latmine {

namespace {

// Next intent after `current` in lectic order, or false when `current` is
// the full attribute set.
bool next_intent(const BinaryContext& ctx, Bitset& current) {
    const std::size_t m = ctx.attribute_count();
    for (std::size_t i = m; i-- > 0;) {
        if (current.test(i)) {
            current.reset(i);
            continue;
        }
        Bitset candidate = current;
        candidate.set(i);
        candidate = to_bits(closure(ctx, attributes_of(candidate)), m);
        bool canonical = true;
        for (std::size_t k = 0; k < i && canonical; ++k)
            if (candidate.test(k) && !current.test(k)) canonical = false;
        if (canonical) {
            current = std::move(candidate);
            return true;
        }
    }
    return false;
}

template <class Set>
std::string join_labels(const Set& ids, const std::vector<std::string>& labels) {
    std::string out;
    for (auto id : ids) {
        if (!out.empty()) out += ' ';
        out += labels[id];
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

ConceptLattice build_lattice(const BinaryContext& ctx, LatticeOptions options) {
    const std::size_t m = ctx.attribute_count();
    if (m > options.max_attributes)
        throw ResourceError("lattice construction limited to " + std::to_string(options.max_attributes) +
                            " attributes, context has " + std::to_string(m));

    ConceptLattice lattice;
    lattice.object_labels = ctx.object_labels();
    lattice.attribute_labels = ctx.attribute_labels();

    std::vector<Bitset> intents;
    Bitset current = to_bits(closure(ctx, Itemset{}), m);
    do {
        intents.push_back(current);
    } while (next_intent(ctx, current));

    std::sort(intents.begin(), intents.end(), [](const Bitset& a, const Bitset& b) {
        const auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return attributes_of(a) < attributes_of(b);
    });
    for (const auto& bits : intents) {
        Itemset items = attributes_of(bits);
        lattice.concepts.push_back({extent(ctx, items), std::move(items)});
    }

    // Covers: i below-adjacent to j when no intent sits strictly between.
    // Sizes strictly grow along a chain, so only larger indices can be above.
    const std::size_t c = intents.size();
    for (std::size_t i = 0; i < c; ++i) {
        std::vector<std::size_t> supersets;
        for (std::size_t j = i + 1; j < c; ++j)
            if (intents[i].is_subset_of(intents[j]) && intents[i] != intents[j]) supersets.push_back(j);
        for (auto j : supersets) {
            bool cover = true;
            for (auto k : supersets) {
                if (k == j) continue;
                if (intents[k].is_subset_of(intents[j]) && intents[k] != intents[j]) {
                    cover = false;
                    break;
                }
            }
            if (cover) lattice.cover_edges.emplace_back(i, j);
        }
    }
    std::sort(lattice.cover_edges.begin(), lattice.cover_edges.end());
    return lattice;
}

std::string export_dot(const ConceptLattice& lattice, LabelMode mode) {
    const auto& concepts = lattice.concepts;
    std::vector<std::string> first_line(concepts.size()), second_line(concepts.size());

    if (mode == LabelMode::full) {
        for (std::size_t i = 0; i < concepts.size(); ++i) {
            first_line[i] = "{" + join_labels(concepts[i].intent, lattice.attribute_labels) + "}";
            second_line[i] = "{" + join_labels(concepts[i].extent, lattice.object_labels) + "}";
        }
    } else {
        // An attribute is introduced at the largest extent whose intent has
        // it; an object at the smallest extent that has it.
        std::vector<std::vector<std::size_t>> attrs(concepts.size()), objs(concepts.size());
        for (std::size_t a = 0; a < lattice.attribute_labels.size(); ++a)
            for (std::size_t i = 0; i < concepts.size(); ++i)
                if (concepts[i].intent.contains(static_cast<AttrId>(a))) {
                    attrs[i].push_back(a);
                    break;
                }
        for (std::size_t o = 0; o < lattice.object_labels.size(); ++o)
            for (std::size_t i = concepts.size(); i-- > 0;)
                if (concepts[i].extent.contains(static_cast<ObjId>(o))) {
                    objs[i].push_back(o);
                    break;
                }
        for (std::size_t i = 0; i < concepts.size(); ++i) {
            first_line[i] = join_labels(attrs[i], lattice.attribute_labels);
            second_line[i] = join_labels(objs[i], lattice.object_labels);
        }
    }

    std::string out = "digraph lattice {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < concepts.size(); ++i)
        out += "  c" + std::to_string(i) + " [label=\"" + dot_escape(first_line[i]) + "\\n" +
               dot_escape(second_line[i]) + "\"];\n";
    for (const auto& [upper, lower] : lattice.cover_edges)
        out += "  c" + std::to_string(upper) + " -> c" + std::to_string(lower) + ";\n";
    out += "}\n";
    return out;
}

std::string export_json(const ConceptLattice& lattice) {
    nlohmann::json concepts = nlohmann::json::array();
    for (const auto& c : lattice.concepts) {
        nlohmann::json ext = nlohmann::json::array(), in = nlohmann::json::array();
        for (auto o : c.extent) ext.push_back(lattice.object_labels[o]);
        for (auto a : c.intent) in.push_back(lattice.attribute_labels[a]);
        concepts.push_back({{"extent", ext}, {"intent", in}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, l] : lattice.cover_edges) edges.push_back({u, l});
    nlohmann::json doc = {{"concepts", concepts}, {"edges", edges}};
    return doc.dump() + "\n";
}

std::string export_text(const ConceptLattice& lattice) {
    std::string out;
    for (std::size_t i = 0; i < lattice.concepts.size(); ++i) {
        const auto& c = lattice.concepts[i];
        out += "CONCEPT " + std::to_string(i) + " extent={" + join_labels(c.extent, lattice.object_labels) +
               "} intent={" + join_labels(c.intent, lattice.attribute_labels) + "}\n";
    }
    for (const auto& [u, l] : lattice.cover_edges)
        out += "EDGE " + std::to_string(u) + " " + std::to_string(l) + "\n";
    return out;
}

} // namespace latmine
