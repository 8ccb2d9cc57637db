#pragma once

#include <string>
#include <string_view>

#include "latmine/context.hpp"

namespace latmine {

/// TAB: one object per line, whitespace-separated attribute tokens. Lines
/// whose first non-blank character is '#' and blank lines are skipped.
/// Objects are labeled o1..oN, attributes ordered by first appearance.
/// Throws ParseError when there is no data line.
BinaryContext parse_tab(std::string_view text);

/// Rows as attribute labels in id order, one line per object. Object labels
/// and attributes that no object has are not representable; an object with
/// an empty row is written as a blank line and disappears on re-reading.
std::string write_tab(const BinaryContext& ctx);

/// Burmeister CXT:
///
///     B
///
///     <N>
///     <M>
///
///     <N object names>
///     <M attribute names>
///     <N lines of M characters in {'.', 'X'}>
BinaryContext parse_cxt(std::string_view text);
std::string write_cxt(const BinaryContext& ctx);

enum class ContextFormat { tab, cxt };

BinaryContext parse_context(std::string_view text, ContextFormat format);
std::string write_context(const BinaryContext& ctx, ContextFormat format);

/// Whole file contents; I/O failures throw ParseError.
std::string read_file(const std::string& path);

} // namespace latmine
