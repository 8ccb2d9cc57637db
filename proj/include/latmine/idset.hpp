#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace latmine {

/// Strictly ascending, duplicate-free sequence of ids. The tag keeps
/// attribute sets and object sets from being mixed up.
template <class Tag>
class IdSet {
public:
    using value_type = std::uint32_t;
    using const_iterator = std::vector<value_type>::const_iterator;

    IdSet() = default;
    IdSet(std::initializer_list<value_type> ids) : ids_(ids) { normalize(); }
    explicit IdSet(std::vector<value_type> ids) : ids_(std::move(ids)) { normalize(); }

    /// Adopts an already-sorted, duplicate-free vector without checking.
    static IdSet from_sorted(std::vector<value_type> ids) {
        IdSet s;
        s.ids_ = std::move(ids);
        return s;
    }

    const_iterator begin() const noexcept { return ids_.begin(); }
    const_iterator end() const noexcept { return ids_.end(); }
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    value_type operator[](std::size_t i) const noexcept { return ids_[i]; }
    value_type back() const noexcept { return ids_.back(); }
    std::span<const value_type> ids() const noexcept { return ids_; }

    bool contains(value_type id) const noexcept { return std::binary_search(ids_.begin(), ids_.end(), id); }

    bool is_subset_of(const IdSet& other) const noexcept {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }
    bool is_proper_subset_of(const IdSet& other) const noexcept {
        return size() < other.size() && is_subset_of(other);
    }

    IdSet with(value_type id) const {
        IdSet out = *this;
        auto pos = std::lower_bound(out.ids_.begin(), out.ids_.end(), id);
        if (pos == out.ids_.end() || *pos != id) out.ids_.insert(pos, id);
        return out;
    }

    IdSet without(value_type id) const {
        IdSet out = *this;
        auto pos = std::lower_bound(out.ids_.begin(), out.ids_.end(), id);
        if (pos != out.ids_.end() && *pos == id) out.ids_.erase(pos);
        return out;
    }

    friend IdSet operator|(const IdSet& a, const IdSet& b) {
        std::vector<value_type> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }
    friend IdSet operator&(const IdSet& a, const IdSet& b) {
        std::vector<value_type> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }
    friend IdSet operator-(const IdSet& a, const IdSet& b) {
        std::vector<value_type> out;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    /// Plain lexicographic order on the id sequences.
    friend auto operator<=>(const IdSet&, const IdSet&) = default;
    friend bool operator==(const IdSet&, const IdSet&) = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<value_type> ids_;
};

struct AttributeTag;
struct ObjectTag;

using AttrId = std::uint32_t;
using ObjId = std::uint32_t;
using Itemset = IdSet<AttributeTag>;
using TidSet = IdSet<ObjectTag>;

/// Size first, then lexicographic: the canonical order of mined itemset lists.
template <class Tag>
bool shortlex_less(const IdSet<Tag>& a, const IdSet<Tag>& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct IdSetHash {
    template <class Tag>
    std::size_t operator()(const IdSet<Tag>& s) const noexcept {
        std::size_t h = s.size();
        for (auto id : s) h ^= id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace latmine
