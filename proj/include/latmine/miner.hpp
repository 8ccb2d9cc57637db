#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "latmine/context.hpp"

namespace latmine {

/// Minimum support, absolute or relative. Relative thresholds resolve to
/// ceil(f * N); a resolved value below 1 is a ConstraintError.
class SupportThreshold {
public:
    static SupportThreshold absolute(std::size_t count) { return SupportThreshold(false, static_cast<double>(count)); }
    /// `fraction` must lie in (0, 1].
    static SupportThreshold relative(double fraction);

    /// Parses "<int>" or "<P>%".
    static SupportThreshold parse(std::string_view text);

    std::size_t resolve(std::size_t object_count) const;

    bool is_relative() const noexcept { return relative_; }
    double value() const noexcept { return value_; }

private:
    SupportThreshold(bool relative, double value) : relative_(relative), value_(value) {}
    bool relative_;
    double value_;
};

enum class Strategy {
    levelwise, ///< candidate generation with subset pruning, one level at a time
    dfs,       ///< depth-first tidset intersection
    hybrid,    ///< levelwise over generators, non-generator supports inferred
};

Strategy parse_strategy(std::string_view name);

struct MineOptions {
    Strategy strategy = Strategy::levelwise;
    /// Worker threads for independent search branches; 0 picks the hardware
    /// concurrency. Results do not depend on this value.
    unsigned threads = 1;
};

struct MinedSet {
    Itemset items;
    std::size_t support = 0;
    bool is_closed = false;
    bool is_generator = false;

    friend bool operator==(const MinedSet&, const MinedSet&) = default;
};

struct EquivalenceClass {
    Itemset closed_set;
    std::vector<Itemset> generators;
    std::size_t support = 0;

    friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

// Every list below is sorted by (size asc, ids lexicographic) and never
// contains the empty set.

std::vector<MinedSet> mine_frequent(const BinaryContext& ctx, SupportThreshold minsup, MineOptions options = {});
std::vector<MinedSet> mine_closed(const BinaryContext& ctx, SupportThreshold minsup, MineOptions options = {});
std::vector<MinedSet> mine_generators(const BinaryContext& ctx, SupportThreshold minsup, MineOptions options = {});

/// Rare sets (support < minsup) whose proper subsets are all frequent.
std::vector<MinedSet> mine_minimal_rare(const BinaryContext& ctx, SupportThreshold minsup,
                                        MineOptions options = {});

/// One class per frequent closed set, sorted by (support desc, closed set
/// lexicographic); generators in each class sorted by (size, lexicographic).
std::vector<EquivalenceClass> mine_equivalence_classes(const BinaryContext& ctx, SupportThreshold minsup,
                                                       MineOptions options = {});

/// Closed-set test used for flagging: no attribute outside `items` is shared
/// by all objects of `tids`.
bool is_closed_extent(const BinaryContext& ctx, const Itemset& items, const Bitset& tids);

} // namespace latmine
