#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concept_homology/errors.hpp"
#include "concept_homology/indicators.hpp"
#include "concept_homology/simplex.hpp"

// Filtration CSV: one simplex per line as "<vertices>, <appearance>", where
// vertices are whitespace separated ids written as "3" or "v3". Blank lines
// and lines starting with '#' are ignored. Missing faces are filled in.

namespace concept_homology {

namespace detail {

inline std::optional<std::vector<std::uint32_t>> parse_vertex_list(std::string_view field)
{
    std::vector<std::uint32_t> ids;
    field = trim(field);
    while (!field.empty()) {
        auto end = field.find_first_of(" \t");
        auto token = field.substr(0, end);
        field = end == std::string_view::npos ? std::string_view{} : trim(field.substr(end));
        if (token.starts_with('v')) token.remove_prefix(1);
        std::uint32_t id = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
        ids.push_back(id);
    }
    if (ids.empty()) return std::nullopt;
    return ids;
}

inline std::optional<std::string_view> first_content_line(std::string_view text)
{
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && !line.starts_with('#')) return line;
    }
    return std::nullopt;
}

} // namespace detail

/// True when the first non-comment line reads as "<vertex ids>, <number>".
inline bool looks_like_filtration_csv(std::string_view text)
{
    auto line = detail::first_content_line(text);
    if (!line) return false;
    auto fields = detail::split_csv_record(*line);
    return fields.size() == 2 && detail::parse_vertex_list(fields[0]) &&
           detail::parse_real(detail::trim(fields[1]));
}

inline FilteredComplex parse_filtration_csv(std::string_view text)
{
    std::vector<Simplex> simplices;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = detail::trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.starts_with('#')) continue;
        auto fields = detail::split_csv_record(line);
        if (fields.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected '<vertices>, <appearance>'");
        auto ids = detail::parse_vertex_list(fields[0]);
        if (!ids) throw ParseError("line " + std::to_string(line_no) + ": bad vertex list '" + fields[0] + "'");
        auto appearance = detail::parse_real(detail::trim(fields[1]));
        if (!appearance) throw ParseError("line " + std::to_string(line_no) + ": bad appearance '" + fields[1] + "'");
        Simplex s;
        s.appearance = *appearance;
        for (auto id : *ids) s.vertices.push_back(VertexId{id});
        simplices.push_back(std::move(s));
    }
    return build_complex(simplices);
}

inline FilteredComplex read_filtration_csv(const std::string& path)
{
    return parse_filtration_csv(read_text_file(path));
}

} // namespace concept_homology
