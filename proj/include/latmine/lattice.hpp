#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latmine/context.hpp"

namespace latmine {

struct Concept {
    TidSet extent;
    Itemset intent;

    friend bool operator==(const Concept&, const Concept&) = default;
};

/// All concepts of a context, sorted by (intent size, intent lexicographic),
/// with the covering relation as (upper, lower) index pairs sorted
/// ascending. The upper concept has the larger extent.
struct ConceptLattice {
    std::vector<Concept> concepts;
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges;
    std::vector<std::string> object_labels;
    std::vector<std::string> attribute_labels;
};

struct LatticeOptions {
    std::size_t max_attributes = 20;
};

/// Throws ResourceError when the context has more than
/// `options.max_attributes` attributes.
ConceptLattice build_lattice(const BinaryContext& ctx, LatticeOptions options = {});

enum class LabelMode {
    full,    ///< intent and extent on every node
    reduced, ///< only the attributes and objects introduced at the node
};

std::string export_dot(const ConceptLattice& lattice, LabelMode mode = LabelMode::full);

/// {"concepts":[{"extent":[...],"intent":[...]}],"edges":[[u,l],...]}
std::string export_json(const ConceptLattice& lattice);

/// Plain listing: one "CONCEPT" line per concept followed by "EDGE" lines.
std::string export_text(const ConceptLattice& lattice);

} // namespace latmine
