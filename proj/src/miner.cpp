#include "latmine/miner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>

#include "latmine/errors.hpp"

namespace latmine {

SupportThreshold SupportThreshold::relative(double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw ConstraintError("relative minsup must lie in (0, 1], got " + std::to_string(fraction));
    return SupportThreshold(true, fraction);
}

SupportThreshold SupportThreshold::parse(std::string_view text) {
    const bool percent = !text.empty() && text.back() == '%';
    if (percent) text.remove_suffix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ConstraintError("minsup must be an integer or a percentage, got '" + std::string(text) + "'");
    if (percent) return relative(value / 100.0);
    if (value < 0 || value != std::floor(value))
        throw ConstraintError("absolute minsup must be a non-negative integer, got '" + std::string(text) + "'");
    return absolute(static_cast<std::size_t>(value));
}

std::size_t SupportThreshold::resolve(std::size_t object_count) const {
    std::size_t resolved = 0;
    if (relative_) {
        // The epsilon absorbs representation error such as 0.05 * 5000.
        resolved = static_cast<std::size_t>(std::ceil(value_ * static_cast<double>(object_count) - 1e-9));
    } else {
        resolved = static_cast<std::size_t>(value_);
    }
    if (resolved < 1) throw ConstraintError("minsup must resolve to at least 1 object (resolved to 0)");
    return resolved;
}

Strategy parse_strategy(std::string_view name) {
    if (name == "levelwise") return Strategy::levelwise;
    if (name == "dfs") return Strategy::dfs;
    if (name == "hybrid") return Strategy::hybrid;
    throw ConstraintError("unknown strategy '" + std::string(name) + "'");
}

bool is_closed_extent(const BinaryContext& ctx, const Itemset& items, const Bitset& tids) {
    for (AttrId a = 0; a < ctx.attribute_count(); ++a)
        if (!items.contains(a) && tids.is_subset_of(ctx.column_bits(a))) return false;
    return true;
}

namespace {

using SupportMap = std::unordered_map<Itemset, std::size_t, IdSetHash>;

void sort_shortlex(std::vector<MinedSet>& sets) {
    std::sort(sets.begin(), sets.end(),
              [](const MinedSet& a, const MinedSet& b) { return shortlex_less(a.items, b.items); });
}

unsigned worker_count(unsigned requested) {
    if (requested == 0) requested = std::max(1U, std::thread::hardware_concurrency());
    return requested;
}

/// Runs task(i) for i in [0, n) on up to `threads` workers.
template <class Task>
void parallel_for(std::size_t n, unsigned threads, Task&& task) {
    threads = static_cast<unsigned>(std::min<std::size_t>(worker_count(threads), n));
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

std::size_t min_subset_support(const Itemset& items, const SupportMap& previous, std::size_t object_count) {
    if (items.size() == 1) return object_count;
    std::size_t lowest = object_count;
    for (auto a : items) lowest = std::min(lowest, previous.at(items.without(a)));
    return lowest;
}

// ---------------------------------------------------------------------------
// Levelwise: Apriori-style join of same-prefix sets, prune on immediate
// subsets, count by intersecting the parents' tidsets. A candidate that
// survives pruning but misses the threshold is minimal rare.

struct LevelwiseResult {
    std::vector<MinedSet> frequent;
    std::vector<MinedSet> minimal_rare;
};

LevelwiseResult run_levelwise(const BinaryContext& ctx, std::size_t minsup) {
    LevelwiseResult result;
    const std::size_t n = ctx.object_count();
    if (n < minsup) return result;

    struct Entry {
        Itemset items;
        Bitset tids;
        std::size_t support;
    };

    std::vector<Entry> level;
    SupportMap supports;
    for (AttrId a = 0; a < ctx.attribute_count(); ++a) {
        Itemset items{a};
        const auto& tids = ctx.column_bits(a);
        const std::size_t s = tids.count();
        MinedSet m{items, s, is_closed_extent(ctx, items, tids), s < n};
        if (s >= minsup) {
            result.frequent.push_back(m);
            supports.emplace(items, s);
            level.push_back({std::move(items), tids, s});
        } else {
            result.minimal_rare.push_back(m);
        }
    }

    while (!level.empty()) {
        std::vector<Entry> next;
        SupportMap next_supports;
        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto& left = level[i];
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                const auto& right = level[j];
                if (!std::equal(left.items.begin(), left.items.end() - 1, right.items.begin())) break;
                const Itemset candidate = left.items.with(right.items.back());

                bool pruned = false;
                for (std::size_t k = 0; k + 2 < candidate.size() && !pruned; ++k)
                    pruned = !supports.contains(candidate.without(candidate[k]));
                if (pruned) continue;

                Bitset tids = left.tids & right.tids;
                const std::size_t s = tids.count();
                const bool generator = s < min_subset_support(candidate, supports, n);
                MinedSet m{candidate, s, is_closed_extent(ctx, candidate, tids), generator};
                if (s >= minsup) {
                    result.frequent.push_back(m);
                    next_supports.emplace(candidate, s);
                    next.push_back({candidate, std::move(tids), s});
                } else {
                    result.minimal_rare.push_back(std::move(m));
                }
            }
        }
        level = std::move(next);
        supports = std::move(next_supports);
    }

    sort_shortlex(result.frequent);
    sort_shortlex(result.minimal_rare);
    return result;
}

// ---------------------------------------------------------------------------
// Depth-first: Eclat over vertical tidsets. Generator flags need the supports
// of all immediate subsets, which are not all visited before a set in
// prefix order, so they are assigned after the traversal.

struct DfsNode {
    AttrId item;
    Bitset tids;
    std::size_t support;
};

void dfs_expand(const BinaryContext& ctx, std::size_t minsup, const Itemset& prefix, const std::vector<DfsNode>& nodes,
                std::size_t index, std::vector<MinedSet>& out) {
    const auto& node = nodes[index];
    const Itemset items = prefix.with(node.item);
    out.push_back({items, node.support, is_closed_extent(ctx, items, node.tids), false});

    std::vector<DfsNode> children;
    for (std::size_t j = index + 1; j < nodes.size(); ++j) {
        Bitset tids = node.tids & nodes[j].tids;
        const std::size_t s = tids.count();
        if (s >= minsup) children.push_back({nodes[j].item, std::move(tids), s});
    }
    for (std::size_t c = 0; c < children.size(); ++c) dfs_expand(ctx, minsup, items, children, c, out);
}

void assign_generator_flags(std::vector<MinedSet>& sets, std::size_t object_count) {
    SupportMap supports;
    supports.reserve(sets.size());
    for (const auto& m : sets) supports.emplace(m.items, m.support);
    for (auto& m : sets) m.is_generator = m.support < min_subset_support(m.items, supports, object_count);
}

std::vector<MinedSet> run_dfs(const BinaryContext& ctx, std::size_t minsup, unsigned threads) {
    std::vector<MinedSet> out;
    if (ctx.object_count() < minsup) return out;

    std::vector<DfsNode> roots;
    for (AttrId a = 0; a < ctx.attribute_count(); ++a) {
        const std::size_t s = ctx.column_bits(a).count();
        if (s >= minsup) roots.push_back({a, ctx.column_bits(a), s});
    }

    std::vector<std::vector<MinedSet>> branches(roots.size());
    parallel_for(roots.size(), threads,
                 [&](std::size_t i) { dfs_expand(ctx, minsup, Itemset{}, roots, i, branches[i]); });
    for (auto& b : branches) out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));

    assign_generator_flags(out, ctx.object_count());
    sort_shortlex(out);
    return out;
}

// Minimal rare sets from a complete frequent family: every candidate is a
// frequent set extended past its last item, so each is seen exactly once.
std::vector<MinedSet> negative_border(const BinaryContext& ctx, std::size_t minsup,
                                      const std::vector<MinedSet>& frequent) {
    std::vector<MinedSet> out;
    if (ctx.object_count() < minsup) return out;

    SupportMap supports;
    for (const auto& m : frequent) supports.emplace(m.items, m.support);

    auto consider = [&](const Itemset& base, const Bitset& base_tids) {
        const AttrId first = base.empty() ? 0 : base.back() + 1;
        for (AttrId a = first; a < ctx.attribute_count(); ++a) {
            Itemset candidate = base.with(a);
            if (supports.contains(candidate)) continue;
            bool all_frequent = true;
            for (auto x : base)
                if (!supports.contains(candidate.without(x))) {
                    all_frequent = false;
                    break;
                }
            if (!all_frequent) continue;
            Bitset tids = base_tids & ctx.column_bits(a);
            out.push_back({candidate, tids.count(), is_closed_extent(ctx, candidate, tids), true});
        }
    };

    consider(Itemset{}, Bitset(ctx.object_count(), true));
    for (const auto& m : frequent) consider(m.items, extent_bits(ctx, m.items));
    sort_shortlex(out);
    return out;
}

// ---------------------------------------------------------------------------
// Hybrid: levelwise over the whole frequent family, but only generators are
// counted. A set with a non-generator immediate subset is itself a
// non-generator whose support is the minimum of its subsets' supports.
// Closures are taken once per generator and define the closed flags.

struct HybridResult {
    std::vector<MinedSet> frequent;
    std::vector<MinedSet> minimal_rare;
    std::vector<EquivalenceClass> classes; // unsorted
};

HybridResult run_hybrid(const BinaryContext& ctx, std::size_t minsup) {
    HybridResult result;
    const std::size_t n = ctx.object_count();
    if (n < minsup) return result;

    struct Entry {
        Itemset items;
        std::size_t support;
        bool key;
        Bitset tids; // only kept for keys
    };
    struct KeyInfo {
        bool key;
        std::size_t support;
    };

    std::vector<Entry> level;
    std::unordered_map<Itemset, KeyInfo, IdSetHash> info;
    std::vector<std::pair<Itemset, Bitset>> keys;

    for (AttrId a = 0; a < ctx.attribute_count(); ++a) {
        Itemset items{a};
        const std::size_t s = ctx.column_bits(a).count();
        const bool key = s < n;
        if (s < minsup) {
            result.minimal_rare.push_back({items, s, false, true});
            continue;
        }
        if (key) keys.emplace_back(items, ctx.column_bits(a));
        info.emplace(items, KeyInfo{key, s});
        level.push_back({items, s, key, key ? ctx.column_bits(a) : Bitset{}});
    }

    while (!level.empty()) {
        std::vector<Entry> next;
        std::unordered_map<Itemset, KeyInfo, IdSetHash> next_info;
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                const auto& left = level[i];
                const auto& right = level[j];
                if (!std::equal(left.items.begin(), left.items.end() - 1, right.items.begin())) break;
                const Itemset candidate = left.items.with(right.items.back());

                bool pruned = false;
                bool all_keys = true;
                std::size_t lowest = n;
                for (auto x : candidate) {
                    auto it = info.find(candidate.without(x));
                    if (it == info.end()) {
                        pruned = true;
                        break;
                    }
                    all_keys = all_keys && it->second.key;
                    lowest = std::min(lowest, it->second.support);
                }
                if (pruned) continue;

                if (!all_keys) {
                    next_info.emplace(candidate, KeyInfo{false, lowest});
                    next.push_back({candidate, lowest, false, Bitset{}});
                    continue;
                }
                Bitset tids = left.tids & right.tids;
                const std::size_t s = tids.count();
                if (s < minsup) {
                    result.minimal_rare.push_back({candidate, s, false, true});
                    continue;
                }
                const bool key = s < lowest;
                next_info.emplace(candidate, KeyInfo{key, s});
                if (key) keys.emplace_back(candidate, tids);
                next.push_back({candidate, s, key, key ? std::move(tids) : Bitset{}});
            }
        }
        for (const auto& e : level) result.frequent.push_back({e.items, e.support, false, e.key});
        level = std::move(next);
        info = std::move(next_info);
    }

    // Attributes shared by every object form the class of the empty set.
    std::map<Itemset, std::size_t> class_index;
    const Bitset all(n, true);
    if (Itemset top = intent_of_bits(ctx, all); !top.empty()) {
        class_index.emplace(top, 0);
        result.classes.push_back({top, {Itemset{}}, n});
    }
    for (auto& [g, tids] : keys) {
        Itemset closed = intent_of_bits(ctx, tids);
        auto [it, fresh] = class_index.try_emplace(closed, result.classes.size());
        if (fresh) result.classes.push_back({closed, {}, tids.count()});
        result.classes[it->second].generators.push_back(g);
    }
    for (auto& m : result.frequent) m.is_closed = class_index.contains(m.items);
    for (auto& m : result.minimal_rare) m.is_closed = is_closed_extent(ctx, m.items, extent_bits(ctx, m.items));

    sort_shortlex(result.frequent);
    sort_shortlex(result.minimal_rare);
    return result;
}

// ---------------------------------------------------------------------------
// Frequent closed sets directly, by close-by-one with canonicity test.

bool is_generator_set(const BinaryContext& ctx, const Itemset& items, std::size_t s) {
    for (auto x : items)
        if (support(ctx, items.without(x)) == s) return false;
    return !items.empty();
}

void cbo_expand(const BinaryContext& ctx, std::size_t minsup, const Bitset& extent, const Itemset& intent,
                AttrId from, std::vector<MinedSet>& out) {
    for (AttrId j = from; j < ctx.attribute_count(); ++j) {
        if (intent.contains(j)) continue;
        Bitset child = extent & ctx.column_bits(j);
        const std::size_t s = child.count();
        if (s < minsup) continue;
        Itemset closed = intent_of_bits(ctx, child);
        // Canonical iff no attribute below j was added by the closure.
        bool canonical = true;
        for (auto a : closed) {
            if (a >= j) break;
            if (!intent.contains(a)) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        out.push_back({closed, s, true, is_generator_set(ctx, closed, s)});
        cbo_expand(ctx, minsup, child, closed, j + 1, out);
    }
}

std::vector<MinedSet> run_cbo(const BinaryContext& ctx, std::size_t minsup, unsigned threads) {
    std::vector<MinedSet> out;
    const std::size_t n = ctx.object_count();
    if (n < minsup) return out;
    const Bitset all(n, true);
    const Itemset top = intent_of_bits(ctx, all);
    if (!top.empty()) out.push_back({top, n, true, false});

    // Top-level branches are independent; each is the subtree under the
    // first attribute added to the top intent.
    const std::size_t m = ctx.attribute_count();
    std::vector<std::vector<MinedSet>> branches(m);
    parallel_for(m, threads, [&](std::size_t j) {
        const auto attr = static_cast<AttrId>(j);
        if (top.contains(attr)) return;
        Bitset child = all & ctx.column_bits(attr);
        const std::size_t s = child.count();
        if (s < minsup) return;
        Itemset closed = intent_of_bits(ctx, child);
        for (auto a : closed) {
            if (a >= attr) break;
            if (!top.contains(a)) return;
        }
        branches[j].push_back({closed, s, true, is_generator_set(ctx, closed, s)});
        cbo_expand(ctx, minsup, child, closed, attr + 1, branches[j]);
    });
    for (auto& b : branches) out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    sort_shortlex(out);
    return out;
}

std::vector<MinedSet> filter(std::vector<MinedSet> sets, bool MinedSet::*flag) {
    std::erase_if(sets, [&](const MinedSet& m) { return !(m.*flag); });
    return sets;
}

void sort_classes(std::vector<EquivalenceClass>& classes) {
    for (auto& c : classes)
        std::sort(c.generators.begin(), c.generators.end(),
                  [](const Itemset& a, const Itemset& b) { return shortlex_less(a, b); });
    std::sort(classes.begin(), classes.end(), [](const EquivalenceClass& a, const EquivalenceClass& b) {
        if (a.support != b.support) return a.support > b.support;
        return a.closed_set < b.closed_set;
    });
}

} // namespace

std::vector<MinedSet> mine_frequent(const BinaryContext& ctx, SupportThreshold minsup, MineOptions options) {
    const std::size_t ms = minsup.resolve(ctx.object_count());
    switch (options.strategy) {
    case Strategy::dfs: return run_dfs(ctx, ms, options.threads);
    case Strategy::hybrid: return run_hybrid(ctx, ms).frequent;
    case Strategy::levelwise: break;
    }
    return run_levelwise(ctx, ms).frequent;
}

std::vector<MinedSet> mine_closed(const BinaryContext& ctx, SupportThreshold minsup, MineOptions options) {
    const std::size_t ms = minsup.resolve(ctx.object_count());
    switch (options.strategy) {
    case Strategy::dfs: return run_cbo(ctx, ms, options.threads);
    case Strategy::hybrid: return filter(run_hybrid(ctx, ms).frequent, &MinedSet::is_closed);
    case Strategy::levelwise: break;
    }
    return filter(run_levelwise(ctx, ms).frequent, &MinedSet::is_closed);
}

std::vector<MinedSet> mine_generators(const BinaryContext& ctx, SupportThreshold minsup, MineOptions options) {
    const std::size_t ms = minsup.resolve(ctx.object_count());
    switch (options.strategy) {
    case Strategy::dfs: return filter(run_dfs(ctx, ms, options.threads), &MinedSet::is_generator);
    case Strategy::hybrid: return filter(run_hybrid(ctx, ms).frequent, &MinedSet::is_generator);
    case Strategy::levelwise: break;
    }
    return filter(run_levelwise(ctx, ms).frequent, &MinedSet::is_generator);
}

std::vector<MinedSet> mine_minimal_rare(const BinaryContext& ctx, SupportThreshold minsup, MineOptions options) {
    const std::size_t ms = minsup.resolve(ctx.object_count());
    switch (options.strategy) {
    case Strategy::dfs: return negative_border(ctx, ms, run_dfs(ctx, ms, options.threads));
    case Strategy::hybrid: return run_hybrid(ctx, ms).minimal_rare;
    case Strategy::levelwise: break;
    }
    return run_levelwise(ctx, ms).minimal_rare;
}

std::vector<EquivalenceClass> mine_equivalence_classes(const BinaryContext& ctx, SupportThreshold minsup,
                                                       MineOptions options) {
    std::vector<EquivalenceClass> classes;
    if (options.strategy == Strategy::hybrid) {
        classes = run_hybrid(ctx, minsup.resolve(ctx.object_count())).classes;
    } else {
        std::map<Itemset, std::size_t> index;
        const std::size_t n = ctx.object_count();
        if (Itemset top = closure(ctx, Itemset{}); !top.empty() && n >= minsup.resolve(n)) {
            index.emplace(top, 0);
            classes.push_back({top, {Itemset{}}, n});
        }
        for (auto& g : mine_generators(ctx, minsup, options)) {
            Itemset closed = closure(ctx, g.items);
            auto [it, fresh] = index.try_emplace(closed, classes.size());
            if (fresh) classes.push_back({closed, {}, g.support});
            classes[it->second].generators.push_back(std::move(g.items));
        }
    }
    sort_classes(classes);
    return classes;
}

} // namespace latmine
