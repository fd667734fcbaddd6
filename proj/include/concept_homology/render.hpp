#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "concept_homology/errors.hpp"
#include "concept_homology/persistence.hpp"

namespace concept_homology {

/// Six significant digits, trailing zeros kept: 1 -> "1.00000".
inline std::string format_real(double x)
{
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.6g", x);
    return buf;
}

/// One line per visible bar: "dim <degree>: [<birth>, <death|inf>)".
inline std::string render_barcode_text(const Barcode& barcode)
{
    std::string out;
    for (const auto& iv : barcode.visible())
        out += "dim " + std::to_string(iv.degree) + ": [" + format_real(iv.birth) + ", " + format_real(iv.death) + ")\n";
    return out;
}

struct RenderSpec {
    unsigned width_px = 640;
    unsigned row_height_px = 12;
    /// Degrees to draw, top to bottom. Empty: 0 through the highest degree with a visible bar.
    std::vector<int> degree_panels;
    bool infinite_marker = true;
};

namespace detail {

inline std::string px(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

} // namespace detail

/**
 * Barcode as an SVG 1.1 document: one panel per degree, one horizontal bar
 * per visible interval, and a shared parameter axis over [0, 1.05 R_p].
 * Infinite bars run to the right edge of the plot.
 */
inline std::string render_barcode_svg(const Barcode& barcode, const RenderSpec& spec = {})
{
    constexpr double left = 60.0, right = 24.0, top = 12.0, header = 18.0, gap = 10.0, axis_height = 40.0;
    if (spec.width_px == 0 || spec.row_height_px == 0) throw ArgumentError("canvas has zero size");
    if (spec.width_px <= left + right) throw ArgumentError("canvas narrower than its margins");

    const auto bars = barcode.visible();
    std::vector<int> panels = spec.degree_panels;
    if (panels.empty() && !bars.empty()) {
        int top_degree = 0;
        for (const auto& iv : bars) top_degree = std::max(top_degree, iv.degree);
        for (int d = 0; d <= top_degree; ++d) panels.push_back(d);
    }
    std::map<int, std::vector<PersistenceInterval>> by_degree;
    for (const auto& iv : bars) by_degree[iv.degree].push_back(iv);

    const double row = spec.row_height_px;
    const double width = spec.width_px;
    const double plot_width = width - left - right;
    const double range = barcode.final_parameter > 0.0 ? barcode.final_parameter * 1.05 : 1.0;
    auto x_of = [&](double r) { return left + std::min(r / range, 1.0) * plot_width; };

    double height = top;
    for (int d : panels) height += header + std::max<std::size_t>(1, by_degree[d].size()) * row + gap;
    height += axis_height;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width_px) +
           "\" height=\"" + detail::px(height) + "\" viewBox=\"0 0 " + std::to_string(spec.width_px) + " " +
           detail::px(height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width_px) + "\" height=\"" + detail::px(height) +
           "\" fill=\"white\"/>\n";

    double y = top;
    for (int d : panels) {
        auto& list = by_degree[d];
        std::stable_sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
            return std::tie(a.birth, a.death) < std::tie(b.birth, b.death);
        });
        svg += "<g class=\"panel\" data-degree=\"" + std::to_string(d) + "\">\n";
        svg += "<text x=\"4\" y=\"" + detail::px(y + 13.0) + "\" font-family=\"sans-serif\" font-size=\"12\">dim " +
               std::to_string(d) + "</text>\n";
        double by = y + header;
        for (const auto& iv : list) {
            const double x0 = x_of(iv.birth);
            const double x1 = iv.is_infinite() ? left + plot_width : x_of(iv.death);
            const double bh = row * 0.6;
            const double bt = by + (row - bh) / 2.0;
            svg += "<rect class=\"bar\" x=\"" + detail::px(x0) + "\" y=\"" + detail::px(bt) + "\" width=\"" +
                   detail::px(std::max(x1 - x0, 0.5)) + "\" height=\"" + detail::px(bh) + "\" fill=\"#1f4e79\"/>\n";
            if (iv.is_infinite() && spec.infinite_marker) {
                const double mid = bt + bh / 2.0;
                svg += "<polygon class=\"arrow\" points=\"" + detail::px(x1) + "," + detail::px(mid - row / 2.0) +
                       " " + detail::px(x1 + right * 0.6) + "," + detail::px(mid) + " " + detail::px(x1) + "," +
                       detail::px(mid + row / 2.0) + "\" fill=\"#1f4e79\"/>\n";
            }
            by += row;
        }
        svg += "</g>\n";
        y += header + std::max<std::size_t>(1, list.size()) * row + gap;
    }

    const double axis_y = y + 4.0;
    svg += "<g class=\"axis\">\n";
    svg += "<line x1=\"" + detail::px(left) + "\" y1=\"" + detail::px(axis_y) + "\" x2=\"" +
           detail::px(left + plot_width) + "\" y2=\"" + detail::px(axis_y) + "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double r = range * k / 4.0;
        const double x = x_of(r);
        char label[32];
        std::snprintf(label, sizeof label, "%.3g", r);
        svg += "<line x1=\"" + detail::px(x) + "\" y1=\"" + detail::px(axis_y) + "\" x2=\"" + detail::px(x) +
               "\" y2=\"" + detail::px(axis_y + 5.0) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + detail::px(x) + "\" y=\"" + detail::px(axis_y + 18.0) +
               "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" + label + "</text>\n";
    }
    svg += "<text x=\"" + detail::px(left + plot_width) + "\" y=\"" + detail::px(axis_y + 30.0) +
           "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">R</text>\n";
    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace concept_homology
