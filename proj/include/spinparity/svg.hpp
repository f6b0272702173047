#pragma once

// Minimal line-chart SVG writer for sweep tables. Line styling follows the
// house convention: negativity solid, geometric discord dashed, Bell function
// dotted. Error rows are skipped; at least two plottable rows are required.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "spinparity/sweep.hpp"

namespace spinparity {

struct CurveStyle {
    std::string column;  ///< table column to plot
    std::string dash;    ///< SVG stroke-dasharray ("" = solid)
    std::string color;
    std::string label;
};

struct ChartStyle {
    std::string title;
    std::vector<CurveStyle> curves;  ///< empty = pick defaults from the table
    int width = 720;
    int height = 480;
};

namespace detail {

inline std::string fmt_svg(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

inline std::vector<CurveStyle> default_curves(const SweepTable& table) {
    auto has = [&](const std::string& c) {
        return std::find(table.columns.begin(), table.columns.end(), c) != table.columns.end();
    };
    if (has("cp_discord_diff"))
        return {{"cp_discord_diff", "", "#1f4f9f", "|D_cp - D|"}};
    return {{"negativity", "", "#1f4f9f", "negativity"},
            {"discord1", "8,4", "#9f1f2f", "discord"},
            {"bell_B", "2,3", "#2f7f2f", "Bell B"}};
}

}  // namespace detail

/// One SVG line chart for the given table. Throws EmptyTable when fewer than
/// two rows are plottable.
inline std::string emit_svg(const SweepTable& table, const ChartStyle& style = {}) {
    std::vector<const SweepRow*> rows;
    for (const SweepRow& r : table.rows)
        if (r.error.empty()) rows.push_back(&r);
    if (rows.size() < 2) throw EmptyTable();

    std::vector<CurveStyle> curves =
        style.curves.empty() ? detail::default_curves(table) : style.curves;

    std::vector<std::size_t> cols;
    for (const CurveStyle& c : curves) {
        const auto it = std::find(table.columns.begin(), table.columns.end(), c.column);
        if (it == table.columns.end()) throw ConfigError("svg", "unknown column " + c.column);
        cols.push_back(static_cast<std::size_t>(it - table.columns.begin()) - 1);
    }

    double xmin = rows.front()->x, xmax = rows.front()->x;
    double ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const SweepRow* r : rows) {
        xmin = std::min(xmin, r->x);
        xmax = std::max(xmax, r->x);
        for (std::size_t c : cols) {
            const double v = r->values[c];
            if (first) { ymin = ymax = v; first = false; }
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) { ymax += 0.5; ymin -= 0.5; }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const int W = style.width, H = style.height;
    const double L = 70, R = W - 20, T = 40, B = H - 50;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (R - L); };
    auto py = [&](double y) { return B - (y - ymin) / (ymax - ymin) * (B - T); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(W) +
           "\" height=\"" + std::to_string(H) + "\" viewBox=\"0 0 " + std::to_string(W) + " " +
           std::to_string(H) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!style.title.empty())
        svg += "<text x=\"" + detail::fmt_svg(W / 2.0) +
               "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + style.title +
               "</text>\n";

    // axes
    svg += "<line x1=\"" + detail::fmt_svg(L) + "\" y1=\"" + detail::fmt_svg(B) + "\" x2=\"" +
           detail::fmt_svg(R) + "\" y2=\"" + detail::fmt_svg(B) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + detail::fmt_svg(L) + "\" y1=\"" + detail::fmt_svg(T) + "\" x2=\"" +
           detail::fmt_svg(L) + "\" y2=\"" + detail::fmt_svg(B) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double yv = ymin + (ymax - ymin) * i / 5.0;
        svg += "<line x1=\"" + detail::fmt_svg(px(xv)) + "\" y1=\"" + detail::fmt_svg(B) +
               "\" x2=\"" + detail::fmt_svg(px(xv)) + "\" y2=\"" + detail::fmt_svg(B + 5) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + detail::fmt_svg(px(xv)) + "\" y=\"" + detail::fmt_svg(B + 18) +
               "\" text-anchor=\"middle\" font-size=\"11\">" + detail::fmt_svg(xv) + "</text>\n";
        svg += "<line x1=\"" + detail::fmt_svg(L - 5) + "\" y1=\"" + detail::fmt_svg(py(yv)) +
               "\" x2=\"" + detail::fmt_svg(L) + "\" y2=\"" + detail::fmt_svg(py(yv)) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + detail::fmt_svg(L - 8) + "\" y=\"" + detail::fmt_svg(py(yv) + 4) +
               "\" text-anchor=\"end\" font-size=\"11\">" + detail::fmt_svg(yv) + "</text>\n";
    }
    svg += "<text x=\"" + detail::fmt_svg((L + R) / 2) + "\" y=\"" + detail::fmt_svg(H - 12.0) +
           "\" text-anchor=\"middle\" font-size=\"13\">" + table.columns[0] + "</text>\n";

    // curves + legend
    double ly = T + 8;
    for (std::size_t k = 0; k < curves.size(); ++k) {
        std::string pts;
        for (const SweepRow* r : rows) {
            pts += detail::fmt_svg(px(r->x));
            pts += ',';
            pts += detail::fmt_svg(py(r->values[cols[k]]));
            pts += ' ';
        }
        svg += "<polyline fill=\"none\" stroke=\"" + curves[k].color +
               "\" stroke-width=\"1.5\"";
        if (!curves[k].dash.empty()) svg += " stroke-dasharray=\"" + curves[k].dash + "\"";
        svg += " points=\"" + pts + "\"/>\n";

        svg += "<line x1=\"" + detail::fmt_svg(R - 150) + "\" y1=\"" + detail::fmt_svg(ly) +
               "\" x2=\"" + detail::fmt_svg(R - 110) + "\" y2=\"" + detail::fmt_svg(ly) +
               "\" stroke=\"" + curves[k].color + "\" stroke-width=\"1.5\"";
        if (!curves[k].dash.empty()) svg += " stroke-dasharray=\"" + curves[k].dash + "\"";
        svg += "/>\n";
        svg += "<text x=\"" + detail::fmt_svg(R - 104) + "\" y=\"" + detail::fmt_svg(ly + 4) +
               "\" font-size=\"12\">" + curves[k].label + "</text>\n";
        ly += 18;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace spinparity
