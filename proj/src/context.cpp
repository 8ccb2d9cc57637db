#include "latmine/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "latmine/errors.hpp"

namespace latmine {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw ConstraintError(std::string("duplicate ") + what + " label '" + l + "'");
}

} // namespace

BinaryContext::BinaryContext(std::vector<std::string> object_labels, std::vector<std::string> attribute_labels,
                             const std::vector<Itemset>& rows)
    : object_labels_(std::move(object_labels)), attribute_labels_(std::move(attribute_labels)) {
    if (rows.size() != object_labels_.size())
        throw ConstraintError("row count " + std::to_string(rows.size()) + " does not match object count " +
                              std::to_string(object_labels_.size()));
    require_unique(object_labels_, "object");
    require_unique(attribute_labels_, "attribute");

    const std::size_t n = object_labels_.size();
    const std::size_t m = attribute_labels_.size();
    row_bits_.assign(n, Bitset(m));
    column_bits_.assign(m, Bitset(n));
    for (std::size_t o = 0; o < n; ++o) {
        for (AttrId a : rows[o]) {
            if (a >= m)
                throw ConstraintError("attribute id " + std::to_string(a) + " out of range in row " +
                                      std::to_string(o));
            row_bits_[o].set(a);
            column_bits_[a].set(o);
        }
    }
}

std::optional<AttrId> BinaryContext::find_attribute(std::string_view label) const {
    auto it = std::find(attribute_labels_.begin(), attribute_labels_.end(), label);
    if (it == attribute_labels_.end()) return std::nullopt;
    return static_cast<AttrId>(it - attribute_labels_.begin());
}

std::optional<ObjId> BinaryContext::find_object(std::string_view label) const {
    auto it = std::find(object_labels_.begin(), object_labels_.end(), label);
    if (it == object_labels_.end()) return std::nullopt;
    return static_cast<ObjId>(it - object_labels_.begin());
}

Itemset BinaryContext::row(ObjId o) const { return attributes_of(row_bits_[o]); }

Bitset to_bits(const Itemset& items, std::size_t universe) {
    Bitset b(universe);
    for (auto a : items) b.set(a);
    return b;
}

Bitset to_bits(const TidSet& objects, std::size_t universe) {
    Bitset b(universe);
    for (auto o : objects) b.set(o);
    return b;
}

Itemset attributes_of(const Bitset& bits) {
    std::vector<AttrId> ids;
    ids.reserve(bits.count());
    bits.for_each([&](std::size_t i) { ids.push_back(static_cast<AttrId>(i)); });
    return Itemset::from_sorted(std::move(ids));
}

TidSet objects_of(const Bitset& bits) {
    std::vector<ObjId> ids;
    ids.reserve(bits.count());
    bits.for_each([&](std::size_t i) { ids.push_back(static_cast<ObjId>(i)); });
    return TidSet::from_sorted(std::move(ids));
}

Bitset extent_bits(const BinaryContext& ctx, const Itemset& items) {
    Bitset out(ctx.object_count(), true);
    for (auto a : items) out &= ctx.column_bits(a);
    return out;
}

TidSet extent(const BinaryContext& ctx, const Itemset& items) { return objects_of(extent_bits(ctx, items)); }

Itemset intent_of_bits(const BinaryContext& ctx, const Bitset& objects) {
    Bitset out(ctx.attribute_count(), true);
    objects.for_each([&](std::size_t o) { out &= ctx.row_bits(static_cast<ObjId>(o)); });
    return attributes_of(out);
}

Itemset intent(const BinaryContext& ctx, const TidSet& objects) {
    Bitset out(ctx.attribute_count(), true);
    for (auto o : objects) out &= ctx.row_bits(o);
    return attributes_of(out);
}

Itemset closure(const BinaryContext& ctx, const Itemset& items) {
    return intent_of_bits(ctx, extent_bits(ctx, items));
}

std::size_t support(const BinaryContext& ctx, const Itemset& items) {
    if (items.empty()) return ctx.object_count();
    if (items.size() == 1) return ctx.column_bits(items[0]).count();
    return extent_bits(ctx, items).count();
}

BinaryContext transpose(const BinaryContext& ctx) {
    std::vector<Itemset> rows;
    rows.reserve(ctx.attribute_count());
    for (AttrId a = 0; a < ctx.attribute_count(); ++a) {
        const auto objs = objects_of(ctx.column_bits(a));
        rows.push_back(Itemset::from_sorted(std::vector<AttrId>(objs.begin(), objs.end())));
    }
    return BinaryContext(ctx.attribute_labels(), ctx.object_labels(), rows);
}

BinaryContext complement(const BinaryContext& ctx) {
    std::vector<Itemset> rows;
    rows.reserve(ctx.object_count());
    for (ObjId o = 0; o < ctx.object_count(); ++o) rows.push_back(attributes_of(ctx.row_bits(o).flipped()));
    return BinaryContext(ctx.object_labels(), ctx.attribute_labels(), rows);
}

namespace {

// Returns a keep-mask over `labels`, in original order.
std::vector<bool> selection_mask(const std::vector<std::string>& labels,
                                 const std::optional<std::vector<std::string>>& keep, const char* what) {
    std::vector<bool> mask(labels.size(), !keep.has_value());
    if (!keep) return mask;
    for (const auto& name : *keep) {
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) throw NameError(std::string("unknown ") + what + " '" + name + "'");
        mask[static_cast<std::size_t>(it - labels.begin())] = true;
    }
    return mask;
}

} // namespace

BinaryContext project(const BinaryContext& ctx, const Projection& projection) {
    const auto keep_obj = selection_mask(ctx.object_labels(), projection.keep_objects, "object");
    auto keep_attr = selection_mask(ctx.attribute_labels(), projection.keep_attributes, "attribute");

    Bitset kept_rows(ctx.object_count());
    for (ObjId o = 0; o < ctx.object_count(); ++o)
        if (keep_obj[o]) kept_rows.set(o);

    if (projection.min_column_support) {
        for (AttrId a = 0; a < ctx.attribute_count(); ++a)
            if (keep_attr[a] && ctx.column_bits(a).intersection_count(kept_rows) < *projection.min_column_support)
                keep_attr[a] = false;
    }

    std::vector<AttrId> new_id(ctx.attribute_count(), 0);
    std::vector<std::string> attr_labels;
    for (AttrId a = 0; a < ctx.attribute_count(); ++a) {
        if (!keep_attr[a]) continue;
        new_id[a] = static_cast<AttrId>(attr_labels.size());
        attr_labels.push_back(ctx.attribute_label(a));
    }

    std::vector<std::string> obj_labels;
    std::vector<Itemset> rows;
    for (ObjId o = 0; o < ctx.object_count(); ++o) {
        if (!keep_obj[o]) continue;
        obj_labels.push_back(ctx.object_label(o));
        std::vector<AttrId> ids;
        ctx.row_bits(o).for_each([&](std::size_t a) {
            if (keep_attr[a]) ids.push_back(new_id[a]);
        });
        rows.push_back(Itemset::from_sorted(std::move(ids)));
    }
    return BinaryContext(std::move(obj_labels), std::move(attr_labels), rows);
}

ContextStats stats(const BinaryContext& ctx) {
    ContextStats s;
    s.objects = ctx.object_count();
    s.attributes = ctx.attribute_count();
    s.attribute_supports.reserve(s.attributes);
    for (AttrId a = 0; a < ctx.attribute_count(); ++a) {
        s.attribute_supports.push_back(ctx.column_bits(a).count());
        s.ones += s.attribute_supports.back();
    }
    const std::size_t cells = s.objects * s.attributes;
    s.density = cells == 0 ? 0.0 : static_cast<double>(s.ones) / static_cast<double>(cells);
    return s;
}

} // namespace latmine
