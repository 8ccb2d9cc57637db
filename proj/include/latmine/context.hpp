#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latmine/bitset.hpp"
#include "latmine/idset.hpp"

namespace latmine {

/// Objects x attributes boolean table. Immutable once built; keeps both the
/// row view (attributes per object) and the column view (objects per
/// attribute) so derivation in either direction is a run of word ANDs.
class BinaryContext {
public:
    BinaryContext() = default;

    /// Throws ConstraintError on duplicate labels, out-of-range attribute ids
    /// or a row/label count mismatch.
    BinaryContext(std::vector<std::string> object_labels, std::vector<std::string> attribute_labels,
                  const std::vector<Itemset>& rows);

    std::size_t object_count() const noexcept { return object_labels_.size(); }
    std::size_t attribute_count() const noexcept { return attribute_labels_.size(); }

    const std::vector<std::string>& object_labels() const noexcept { return object_labels_; }
    const std::vector<std::string>& attribute_labels() const noexcept { return attribute_labels_; }
    const std::string& object_label(ObjId o) const { return object_labels_[o]; }
    const std::string& attribute_label(AttrId a) const { return attribute_labels_[a]; }

    std::optional<AttrId> find_attribute(std::string_view label) const;
    std::optional<ObjId> find_object(std::string_view label) const;

    bool has(ObjId o, AttrId a) const noexcept { return row_bits_[o].test(a); }
    Itemset row(ObjId o) const;

    const Bitset& row_bits(ObjId o) const noexcept { return row_bits_[o]; }
    const Bitset& column_bits(AttrId a) const noexcept { return column_bits_[a]; }

    friend bool operator==(const BinaryContext&, const BinaryContext&) = default;

private:
    std::vector<std::string> object_labels_;
    std::vector<std::string> attribute_labels_;
    std::vector<Bitset> row_bits_;
    std::vector<Bitset> column_bits_;
};

// Galois connection.

Bitset extent_bits(const BinaryContext& ctx, const Itemset& items);
TidSet extent(const BinaryContext& ctx, const Itemset& items);
Itemset intent(const BinaryContext& ctx, const TidSet& objects);
Itemset intent_of_bits(const BinaryContext& ctx, const Bitset& objects);

/// intent(extent(items)); the full attribute set when no object has `items`.
Itemset closure(const BinaryContext& ctx, const Itemset& items);

/// Absolute support, |extent(items)|. support(ctx, {}) == object_count().
std::size_t support(const BinaryContext& ctx, const Itemset& items);

Bitset to_bits(const Itemset& items, std::size_t universe);
Bitset to_bits(const TidSet& objects, std::size_t universe);
Itemset attributes_of(const Bitset& bits);
TidSet objects_of(const Bitset& bits);

// Structural transformations. Each returns a new context.

BinaryContext transpose(const BinaryContext& ctx);
BinaryContext complement(const BinaryContext& ctx);

struct Projection {
    std::optional<std::vector<std::string>> keep_objects;
    std::optional<std::vector<std::string>> keep_attributes;
    std::optional<std::size_t> min_column_support;
};

/// Sub-context in original label order. Unknown labels throw NameError.
BinaryContext project(const BinaryContext& ctx, const Projection& projection);

struct ContextStats {
    std::size_t objects = 0;
    std::size_t attributes = 0;
    std::size_t ones = 0;
    double density = 0.0;
    std::vector<std::size_t> attribute_supports;
};

ContextStats stats(const BinaryContext& ctx);

} // namespace latmine
