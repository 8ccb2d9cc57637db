#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latmine/context.hpp"
#include "latmine/formats.hpp"

namespace latmine {

struct NumericTable {
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> rows;
    std::optional<std::vector<std::string>> object_labels;

    std::size_t row_count() const noexcept { return rows.size(); }
    std::size_t column_count() const noexcept { return column_names.size(); }
};

/// Comma-separated, header line first. With `has_label_column` the first
/// column holds object labels. Errors report the 1-based data row and the
/// column name.
NumericTable parse_csv(std::string_view text, bool has_label_column = false);

enum class Binning { equal_width, equal_frequency };

struct BinningSpec {
    Binning strategy = Binning::equal_width;
    std::size_t bin_count = 2;
};

/// One attribute "col[lo;hi)" per bin and column (the last bin of a column
/// is "col[lo;hi]"); every object gets exactly one attribute per column.
///
/// Equal-width splits [min, max] into bin_count intervals of equal length.
/// Equal-frequency places the k-th cut at the ceil(k*n/bin_count)-th order
/// statistic; a value equal to a cut goes to the lower bin, and repeated
/// cuts merge their bins. A constant column always becomes one bin.
BinaryContext discretize(const NumericTable& table, const BinningSpec& spec);

/// Parses `text` in one context format and writes it in another.
std::string convert(std::string_view text, ContextFormat from, ContextFormat to);
std::string convert_file(const std::string& path, ContextFormat from, ContextFormat to);

} // namespace latmine
