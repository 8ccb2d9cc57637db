#pragma once

// Brute-force powerset reference used to check the miners, rule bases and
// lattice. It works on its own row-mask copy of the context and shares no
// code with the library beyond reading cells.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "latmine/context.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Table {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Mask> rows;

    explicit Table(const latmine::BinaryContext& ctx) : n(ctx.object_count()), m(ctx.attribute_count()) {
        for (std::size_t o = 0; o < n; ++o) {
            Mask row = 0;
            for (std::size_t a = 0; a < m; ++a)
                if (ctx.has(static_cast<latmine::ObjId>(o), static_cast<latmine::AttrId>(a))) row |= Mask{1} << a;
            rows.push_back(row);
        }
    }

    Mask full() const { return m == 32 ? ~Mask{0} : (Mask{1} << m) - 1; }
    std::size_t subsets() const { return std::size_t{1} << m; }

    std::size_t support(Mask x) const {
        std::size_t s = 0;
        for (auto r : rows)
            if ((r & x) == x) ++s;
        return s;
    }

    Mask closure(Mask x) const {
        Mask c = full();
        for (auto r : rows)
            if ((r & x) == x) c &= r;
        return c;
    }

    bool generator(Mask x) const {
        const auto s = support(x);
        for (std::size_t a = 0; a < m; ++a)
            if ((x >> a) & 1U && support(x & ~(Mask{1} << a)) == s) return false;
        return true;
    }
};

struct Entry {
    Mask items;
    std::size_t support;
    bool operator==(const Entry&) const = default;
};

inline latmine::Itemset to_itemset(Mask x) {
    std::vector<latmine::AttrId> ids;
    for (latmine::AttrId a = 0; a < 32; ++a)
        if ((x >> a) & 1U) ids.push_back(a);
    return latmine::Itemset::from_sorted(std::move(ids));
}

inline Mask to_mask(const latmine::Itemset& s) {
    Mask x = 0;
    for (auto a : s) x |= Mask{1} << a;
    return x;
}

// Sort by (size, lexicographic ids), the library's canonical order.
inline void canonical(std::vector<Entry>& v) {
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) {
        return latmine::shortlex_less(to_itemset(a.items), to_itemset(b.items));
    });
}

inline std::vector<Entry> frequent(const Table& t, std::size_t minsup) {
    std::vector<Entry> out;
    for (Mask x = 1; x < t.subsets(); ++x)
        if (auto s = t.support(x); s >= minsup) out.push_back({x, s});
    canonical(out);
    return out;
}

inline std::vector<Entry> closed(const Table& t, std::size_t minsup) {
    std::vector<Entry> out;
    for (Mask x = 1; x < t.subsets(); ++x)
        if (auto s = t.support(x); s >= minsup && t.closure(x) == x) out.push_back({x, s});
    canonical(out);
    return out;
}

inline std::vector<Entry> generators(const Table& t, std::size_t minsup) {
    std::vector<Entry> out;
    for (Mask x = 1; x < t.subsets(); ++x)
        if (auto s = t.support(x); s >= minsup && t.generator(x)) out.push_back({x, s});
    canonical(out);
    return out;
}

inline std::vector<Entry> minimal_rare(const Table& t, std::size_t minsup) {
    std::vector<Entry> out;
    for (Mask x = 1; x < t.subsets(); ++x) {
        const auto s = t.support(x);
        if (s >= minsup) continue;
        bool minimal = true;
        for (std::size_t a = 0; a < t.m && minimal; ++a)
            if ((x >> a) & 1U) minimal = t.support(x & ~(Mask{1} << a)) >= minsup;
        if (minimal) out.push_back({x, s});
    }
    canonical(out);
    return out;
}

/// Pseudo-closed sets by the recursive definition, smallest first.
inline std::vector<Mask> pseudo_closed(const Table& t) {
    std::vector<Mask> all;
    for (Mask x = 0; x < t.subsets(); ++x) all.push_back(x);
    std::stable_sort(all.begin(), all.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    std::vector<Mask> found;
    for (auto p : all) {
        if (t.closure(p) == p) continue;
        bool ok = true;
        for (auto q : found)
            if ((q & p) == q && q != p && (t.closure(q) & p) != t.closure(q)) {
                ok = false;
                break;
            }
        if (ok) found.push_back(p);
    }
    return found;
}

/// Distinct closures over the powerset, i.e. all concept intents.
inline std::vector<Mask> intents(const Table& t) {
    std::set<Mask> s;
    for (Mask x = 0; x < t.subsets(); ++x) s.insert(t.closure(x));
    return {s.begin(), s.end()};
}

/// Covering pairs (smaller intent, larger intent) among `intents`.
inline std::set<std::pair<Mask, Mask>> covers(const std::vector<Mask>& ints) {
    std::set<std::pair<Mask, Mask>> out;
    for (auto a : ints)
        for (auto b : ints) {
            if (a == b || (a & b) != a) continue;
            bool direct = true;
            for (auto c : ints)
                if (c != a && c != b && (a & c) == a && (c & b) == c) {
                    direct = false;
                    break;
                }
            if (direct) out.emplace(a, b);
        }
    return out;
}

/// Random context built straight through the constructor.
inline latmine::BinaryContext random_context(std::mt19937& rng, std::size_t n, std::size_t m, double density) {
    std::bernoulli_distribution cell(density);
    std::vector<std::string> objects, attributes;
    for (std::size_t i = 0; i < n; ++i) objects.push_back("g" + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) attributes.push_back("m" + std::to_string(j));
    std::vector<latmine::Itemset> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<latmine::AttrId> row;
        for (std::size_t j = 0; j < m; ++j)
            if (cell(rng)) row.push_back(static_cast<latmine::AttrId>(j));
        rows.push_back(latmine::Itemset::from_sorted(std::move(row)));
    }
    return latmine::BinaryContext(objects, attributes, rows);
}

} // namespace oracle
