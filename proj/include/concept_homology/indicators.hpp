#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "concept_homology/builders.hpp"
#include "concept_homology/errors.hpp"
#include "concept_homology/logging.hpp"

namespace concept_homology {

enum class MissingPolicy { drop_row, fail };

inline MissingPolicy parse_missing_policy(std::string_view name)
{
    if (name == "drop-row") return MissingPolicy::drop_row;
    if (name == "fail") return MissingPolicy::fail;
    throw ArgumentError("unknown missing-data policy: " + std::string(name));
}

struct DroppedRow {
    std::size_t line = 0;
    std::string label;
    std::string column;

    friend bool operator==(const DroppedRow&, const DroppedRow&) = default;
};

/// Labeled rows of numeric indicators; every retained row is complete.
struct IndicatorTable {
    std::vector<std::string> labels;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values;
    std::optional<std::string> year;
    std::vector<DroppedRow> dropped;

    [[nodiscard]] std::size_t rows() const { return labels.size(); }
};

namespace detail {

// Splits one CSV record. Double quotes protect commas; "" inside quotes is a literal quote.
inline std::vector<std::string> split_csv_record(std::string_view line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (quoted) {
            if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
                fields.back() += '"';
                ++k;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_real(std::string_view s)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

} // namespace detail

/**
 * Parses an indicator table: a header row, then one row per item with the
 * label in column 1 and numeric indicators after it. An empty cell is
 * missing; under drop_row the row is removed and logged, under fail it is a
 * ParseError naming the cell.
 */
inline IndicatorTable parse_indicator_csv(std::string_view text, MissingPolicy policy = MissingPolicy::drop_row)
{
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    IndicatorTable table;
    bool have_header = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (detail::trim(line).empty()) continue;

        auto fields = detail::split_csv_record(line);
        if (!have_header) {
            for (std::size_t k = 1; k < fields.size(); ++k) table.columns.emplace_back(detail::trim(fields[k]));
            have_header = true;
            continue;
        }
        if (fields.size() != table.columns.size() + 1)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(table.columns.size() + 1) + " cells, found " +
                             std::to_string(fields.size()));

        std::string label(detail::trim(fields[0]));
        std::vector<double> row;
        row.reserve(table.columns.size());
        std::optional<std::string> missing;
        for (std::size_t k = 1; k < fields.size(); ++k) {
            const auto cell = detail::trim(fields[k]);
            if (cell.empty()) {
                if (policy == MissingPolicy::fail)
                    throw ParseError("line " + std::to_string(line_no) + ", column '" + table.columns[k - 1] +
                                     "': missing value for '" + label + "'");
                if (!missing) missing = table.columns[k - 1];
                continue;
            }
            auto value = detail::parse_real(cell);
            if (!value)
                throw ParseError("line " + std::to_string(line_no) + ", column '" + table.columns[k - 1] +
                                 "': not a number: '" + std::string(cell) + "'");
            row.push_back(*value);
        }
        if (missing) {
            logger().warn("dropping row '{}' (line {}): missing value in column '{}'", label, line_no, *missing);
            table.dropped.push_back(DroppedRow{line_no, label, *missing});
            continue;
        }
        table.labels.push_back(std::move(label));
        table.values.push_back(std::move(row));
    }
    if (!have_header) throw ParseError("missing header row");
    return table;
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline IndicatorTable ingest_csv(const std::string& path, MissingPolicy policy = MissingPolicy::drop_row)
{
    return parse_indicator_csv(read_text_file(path), policy);
}

/// Unique indicator vectors with the labels of the rows that share each one.
struct DedupResult {
    PointCloud unique_points;
    std::vector<std::vector<std::string>> groups;
};

/// Groups rows with bitwise-identical vectors; points keep first-occurrence order.
inline DedupResult dedup(const IndicatorTable& table)
{
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    std::vector<std::vector<double>> points;
    std::vector<std::vector<std::string>> groups;
    for (std::size_t r = 0; r < table.rows(); ++r) {
        std::vector<std::uint64_t> key;
        key.reserve(table.values[r].size());
        for (double x : table.values[r]) key.push_back(std::bit_cast<std::uint64_t>(x));
        auto [it, inserted] = seen.try_emplace(std::move(key), points.size());
        if (inserted) {
            points.push_back(table.values[r]);
            groups.emplace_back();
        }
        groups[it->second].push_back(table.labels[r]);
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    return DedupResult{PointCloud(std::move(points)), std::move(groups)};
}

/// Rescales every coordinate to [0, 1] by its range over the cloud; constant coordinates become 0.
inline PointCloud min_max_normalize(const PointCloud& cloud)
{
    if (cloud.empty()) return cloud;
    const std::size_t d = cloud.dim();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> lo(d, inf), hi(d, -inf);
    for (const auto& p : cloud.points())
        for (std::size_t k = 0; k < d; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    auto out = cloud.points();
    for (auto& p : out)
        for (std::size_t k = 0; k < d; ++k) p[k] = hi[k] > lo[k] ? (p[k] - lo[k]) / (hi[k] - lo[k]) : 0.0;
    return PointCloud(std::move(out));
}

} // namespace concept_homology
