#include "latmine/preprocess.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_set>

#include "latmine/errors.hpp"

namespace latmine {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            return cells;
        }
        cells.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

struct Bin {
    std::string label;
    double upper = 0.0; // inclusive upper bound of the bin's values
};

// Bins of one column in ascending order; a value goes to the first bin whose
// inclusive upper bound is >= the value.
std::vector<Bin> equal_width_bins(const std::string& name, double lo, double hi, std::size_t count) {
    if (lo == hi || count == 1)
        return {{name + "[" + format_number(lo) + ";" + format_number(hi) + "]", hi}};
    std::vector<double> edges(count + 1);
    for (std::size_t i = 0; i <= count; ++i)
        edges[i] = i == count ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count);
    std::vector<Bin> bins;
    for (std::size_t i = 0; i < count; ++i) {
        const bool last = i + 1 == count;
        Bin b;
        b.label = name + "[" + format_number(edges[i]) + ";" + format_number(edges[i + 1]) + (last ? "]" : ")");
        // Half-open: everything strictly below the next edge.
        b.upper = last ? hi : std::nextafter(edges[i + 1], -INFINITY);
        bins.push_back(std::move(b));
    }
    return bins;
}

std::vector<Bin> equal_frequency_bins(const std::string& name, std::vector<double> values, std::size_t count) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    const double hi = values.back();

    std::vector<double> cuts;
    for (std::size_t k = 1; k < count; ++k) {
        const std::size_t rank = (k * n + count - 1) / count; // 1-based order statistic
        const double cut = values[std::max<std::size_t>(rank, 1) - 1];
        if (cut < hi && (cuts.empty() || cut > cuts.back())) cuts.push_back(cut);
    }
    cuts.push_back(hi);

    auto next_above = [&](double v) { return *std::upper_bound(values.begin(), values.end(), v); };

    std::vector<Bin> bins;
    double lo = values.front();
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        const bool last = k + 1 == cuts.size();
        Bin b;
        b.upper = cuts[k];
        if (last) {
            b.label = name + "[" + format_number(lo) + ";" + format_number(hi) + "]";
        } else {
            const double next = next_above(cuts[k]);
            b.label = name + "[" + format_number(lo) + ";" + format_number(next) + ")";
            lo = next;
        }
        bins.push_back(std::move(b));
    }
    return bins;
}

} // namespace

NumericTable parse_csv(std::string_view text, bool has_label_column) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    {
        std::size_t start = 0, lineno = 1;
        while (start < text.size()) {
            auto nl = text.find('\n', start);
            if (nl == std::string_view::npos) nl = text.size();
            auto line = text.substr(start, nl - start);
            if (!trim(line).empty()) lines.emplace_back(lineno, line);
            start = nl + 1;
            ++lineno;
        }
    }
    if (lines.empty()) throw ParseError("CSV input has no header line");

    NumericTable table;
    auto header = split(lines.front().second, ',');
    const std::size_t skip = has_label_column ? 1 : 0;
    if (header.size() < skip) throw ParseError("header has no label column", lines.front().first);
    std::unordered_set<std::string_view> seen;
    for (std::size_t c = skip; c < header.size(); ++c) {
        if (!seen.insert(header[c]).second)
            throw ParseError("duplicate column name '" + std::string(header[c]) + "'", lines.front().first);
        table.column_names.emplace_back(header[c]);
    }
    if (has_label_column) table.object_labels.emplace();

    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto [lineno, line] = lines[r];
        auto cells = split(line, ',');
        if (cells.size() != header.size())
            throw ParseError("row " + std::to_string(r) + " has " + std::to_string(cells.size()) +
                                 " cells, header has " + std::to_string(header.size()),
                             lineno);
        if (has_label_column) table.object_labels->emplace_back(cells[0]);
        std::vector<double> row;
        row.reserve(table.column_names.size());
        for (std::size_t c = skip; c < cells.size(); ++c) {
            const auto cell = cells[c];
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value))
                throw ParseError("row " + std::to_string(r) + ", column '" + table.column_names[c - skip] +
                                     "': not a finite number '" + std::string(cell) + "'",
                                 lineno, c + 1);
            row.push_back(value);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

BinaryContext discretize(const NumericTable& table, const BinningSpec& spec) {
    if (spec.bin_count < 1) throw ConstraintError("bin count must be >= 1");
    if (table.rows.empty()) throw ConstraintError("cannot discretize an empty table");
    if (table.object_labels && table.object_labels->size() != table.rows.size())
        throw ConstraintError("object label count does not match row count");

    const std::size_t n = table.row_count();
    std::vector<std::string> attributes;
    std::vector<std::vector<AttrId>> rows(n);

    for (std::size_t c = 0; c < table.column_count(); ++c) {
        std::vector<double> column(n);
        for (std::size_t r = 0; r < n; ++r) {
            if (table.rows[r].size() != table.column_count())
                throw ConstraintError("table row " + std::to_string(r + 1) + " is not rectangular");
            column[r] = table.rows[r][c];
        }
        const auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
        const auto bins = spec.strategy == Binning::equal_width
                              ? equal_width_bins(table.column_names[c], *lo_it, *hi_it, spec.bin_count)
                              : equal_frequency_bins(table.column_names[c], column, spec.bin_count);

        const auto base = static_cast<AttrId>(attributes.size());
        for (const auto& b : bins) attributes.push_back(b.label);
        for (std::size_t r = 0; r < n; ++r) {
            auto it = std::lower_bound(bins.begin(), bins.end(), column[r],
                                       [](const Bin& b, double v) { return b.upper < v; });
            if (it == bins.end()) --it;
            rows[r].push_back(base + static_cast<AttrId>(it - bins.begin()));
        }
    }

    std::vector<std::string> objects;
    if (table.object_labels) {
        objects = *table.object_labels;
    } else {
        for (std::size_t r = 0; r < n; ++r) objects.push_back("o" + std::to_string(r + 1));
    }
    std::vector<Itemset> itemsets;
    itemsets.reserve(n);
    for (auto& r : rows) itemsets.push_back(Itemset::from_sorted(std::move(r)));
    try {
        return BinaryContext(std::move(objects), std::move(attributes), itemsets);
    } catch (const ConstraintError& e) {
        throw ParseError(e.what());
    }
}

std::string convert(std::string_view text, ContextFormat from, ContextFormat to) {
    return write_context(parse_context(text, from), to);
}

std::string convert_file(const std::string& path, ContextFormat from, ContextFormat to) {
    return convert(read_file(path), from, to);
}

} // namespace latmine
