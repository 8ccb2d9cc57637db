#include "latmine/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "latmine/errors.hpp"

namespace latmine {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::size_t parse_count(std::string_view line, std::size_t lineno, const char* what) {
    line = trim(line);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (line.empty() || ec != std::errc{} || ptr != line.data() + line.size())
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(line) + "'", lineno);
    return value;
}

BinaryContext build_checked(std::vector<std::string> objects, std::vector<std::string> attributes,
                            const std::vector<Itemset>& rows) {
    try {
        return BinaryContext(std::move(objects), std::move(attributes), rows);
    } catch (const ConstraintError& e) {
        throw ParseError(e.what());
    }
}

} // namespace

BinaryContext parse_tab(std::string_view text) {
    std::vector<std::string> attributes;
    std::unordered_map<std::string, AttrId> ids;
    std::vector<Itemset> rows;

    for (auto raw : split_lines(text)) {
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::vector<AttrId> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && is_space(line[pos])) ++pos;
            std::size_t end = pos;
            while (end < line.size() && !is_space(line[end])) ++end;
            if (end == pos) break;
            std::string token(line.substr(pos, end - pos));
            auto [it, fresh] = ids.try_emplace(token, static_cast<AttrId>(attributes.size()));
            if (fresh) attributes.push_back(std::move(token));
            row.push_back(it->second);
            pos = end;
        }
        rows.emplace_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("TAB input has no data lines");

    std::vector<std::string> objects;
    objects.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) objects.push_back("o" + std::to_string(i + 1));
    return build_checked(std::move(objects), std::move(attributes), rows);
}

std::string write_tab(const BinaryContext& ctx) {
    std::string out;
    for (ObjId o = 0; o < ctx.object_count(); ++o) {
        bool first = true;
        ctx.row_bits(o).for_each([&](std::size_t a) {
            if (!first) out += ' ';
            out += ctx.attribute_label(static_cast<AttrId>(a));
            first = false;
        });
        out += '\n';
    }
    return out;
}

BinaryContext parse_cxt(std::string_view text) {
    const auto lines = split_lines(text);
    auto line_at = [&](std::size_t i) -> std::string_view {
        if (i >= lines.size()) throw ParseError("unexpected end of CXT input", i + 1);
        return lines[i];
    };

    if (trim(line_at(0)) != "B") throw ParseError("CXT input must start with 'B'", 1);
    if (!trim(line_at(1)).empty()) throw ParseError("expected blank line after 'B'", 2);
    const std::size_t n = parse_count(line_at(2), 3, "object count");
    const std::size_t m = parse_count(line_at(3), 4, "attribute count");
    if (!trim(line_at(4)).empty()) throw ParseError("expected blank line after counts", 5);

    std::size_t cursor = 5;
    const std::size_t needed = cursor + 2 * n + m;
    if (lines.size() < needed)
        throw ParseError("declared " + std::to_string(n) + " objects and " + std::to_string(m) +
                         " attributes but input has only " + std::to_string(lines.size()) + " lines");

    std::vector<std::string> objects;
    for (std::size_t i = 0; i < n; ++i) objects.emplace_back(trim(lines[cursor++]));
    std::vector<std::string> attributes;
    for (std::size_t j = 0; j < m; ++j) attributes.emplace_back(trim(lines[cursor++]));

    std::vector<Itemset> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i, ++cursor) {
        auto row_text = lines[cursor];
        while (!row_text.empty() && is_space(row_text.back())) row_text.remove_suffix(1);
        if (row_text.size() != m)
            throw ParseError("matrix line has " + std::to_string(row_text.size()) + " cells, expected " +
                                 std::to_string(m),
                             cursor + 1);
        std::vector<AttrId> row;
        for (std::size_t j = 0; j < m; ++j) {
            const char c = row_text[j];
            if (c == 'X' || c == 'x')
                row.push_back(static_cast<AttrId>(j));
            else if (c != '.')
                throw ParseError(std::string("invalid matrix character '") + c + "'", cursor + 1, j + 1);
        }
        rows.push_back(Itemset::from_sorted(std::move(row)));
    }
    for (; cursor < lines.size(); ++cursor)
        if (!trim(lines[cursor]).empty())
            throw ParseError("content after the declared " + std::to_string(n) + " matrix lines", cursor + 1);

    return build_checked(std::move(objects), std::move(attributes), rows);
}

std::string write_cxt(const BinaryContext& ctx) {
    std::string out = "B\n\n";
    out += std::to_string(ctx.object_count()) + "\n";
    out += std::to_string(ctx.attribute_count()) + "\n\n";
    for (const auto& o : ctx.object_labels()) out += o + "\n";
    for (const auto& a : ctx.attribute_labels()) out += a + "\n";
    for (ObjId o = 0; o < ctx.object_count(); ++o) {
        for (AttrId a = 0; a < ctx.attribute_count(); ++a) out += ctx.has(o, a) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

BinaryContext parse_context(std::string_view text, ContextFormat format) {
    return format == ContextFormat::cxt ? parse_cxt(text) : parse_tab(text);
}

std::string write_context(const BinaryContext& ctx, ContextFormat format) {
    return format == ContextFormat::cxt ? write_cxt(ctx) : write_tab(ctx);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace latmine
