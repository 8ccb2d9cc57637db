#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "latmine/context.hpp"
#include "latmine/miner.hpp"

namespace latmine {

struct GenSpec {
    std::size_t rows = 0;
    std::size_t cols = 0;
    double density = 0.5;
    std::uint64_t seed = 0;
};

/// rows x cols context labeled o1..oN / a1..aM. Cells are drawn in row-major
/// order from std::mt19937_64 seeded with `seed`; a cell is set when the top
/// 53 bits of the next output, scaled to [0, 1), are below `density`. The
/// stream is fully specified by the standard, so a seed reproduces the same
/// context on every platform. Invalid ranges throw ConstraintError.
BinaryContext random_context(const GenSpec& spec);

/// One block per class:
///
///     CLASS closed={a c d} supp=1
///       gen: {d}
std::string render_equivalence_classes(const std::vector<EquivalenceClass>& classes,
                                       const std::vector<std::string>& attribute_labels);

} // namespace latmine
