#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "teg/components.hpp"
#include "teg/distribution.hpp"

namespace teg {

namespace detail {

inline std::string svg_num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace detail

struct BarcodeStyle {
    double width = 900.0;
    double row_height = 14.0;
    double margin = 40.0;
};

/// Barcode as SVG: one row per component, largest at the bottom, one
/// vertical tick per event.
inline std::string render_barcode_svg(const std::vector<BarcodeRow>& rows, const BarcodeStyle& style = {})
{
    double lo = 0.0;
    double hi = 1.0;
    bool first = true;
    for (const auto& row : rows) {
        for (double t : row.times) {
            lo = first ? t : std::min(lo, t);
            hi = first ? t : std::max(hi, t);
            first = false;
        }
    }
    if (hi <= lo) hi = lo + 1.0;

    const double plot_w = style.width - 2 * style.margin;
    const double height = 2 * style.margin + style.row_height * static_cast<double>(rows.size());
    auto x_of = [&](double t) { return style.margin + (t - lo) / (hi - lo) * plot_w; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::svg_num(style.width) << "\" height=\""
        << detail::svg_num(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const double y_bottom = height - style.margin - style.row_height * static_cast<double>(r);
        const double y_top = y_bottom - style.row_height * 0.8;
        svg << "<g class=\"component\" data-rank=\"" << rows[r].component << "\">\n";
        svg << "<text x=\"" << detail::svg_num(style.margin - 6) << "\" y=\"" << detail::svg_num(y_bottom - 2)
            << "\" font-size=\"9\" text-anchor=\"end\">" << rows[r].component << "</text>\n";
        for (double t : rows[r].times) {
            const double x = x_of(t);
            svg << "<line x1=\"" << detail::svg_num(x) << "\" x2=\"" << detail::svg_num(x) << "\" y1=\""
                << detail::svg_num(y_top) << "\" y2=\"" << detail::svg_num(y_bottom)
                << "\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
        }
        svg << "</g>\n";
    }
    svg << "<text x=\"" << detail::svg_num(style.margin) << "\" y=\"" << detail::svg_num(height - 10)
        << "\" font-size=\"10\">t = " << lo << "</text>\n";
    svg << "<text x=\"" << detail::svg_num(style.width - style.margin) << "\" y=\""
        << detail::svg_num(height - 10) << "\" font-size=\"10\" text-anchor=\"end\">t = " << hi << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

/// Step plot of one or more CCDFs on log-log axes (linear x when a sample
/// is not positive).
inline std::string render_ccdf_svg(const std::vector<std::pair<std::string, EmpiricalCcdf>>& curves,
                                   double width = 640.0, double height = 480.0)
{
    const double margin = 50.0;
    double xmin = 0.0;
    double xmax = 1.0;
    double smin = 1.0;
    bool first = true;
    for (const auto& [name, c] : curves) {
        const auto x = c.support();
        xmin = first ? x.front() : std::min(xmin, x.front());
        xmax = first ? x.back() : std::max(xmax, x.back());
        first = false;
        for (double s : c.survival()) {
            if (s > 0.0) smin = std::min(smin, s);
        }
    }
    const bool logx = xmin > 0.0;
    auto fx = [&](double v) { return logx ? std::log10(v) : v; };
    double a = fx(xmin), b = fx(xmax);
    if (b <= a) b = a + 1.0;
    const double ylo = std::log10(smin);
    const double yspan = ylo < 0.0 ? -ylo : 1.0;
    auto px = [&](double v) { return margin + (fx(v) - a) / (b - a) * (width - 2 * margin); };
    auto py = [&](double s) {
        const double ly = s > 0.0 ? std::log10(s) : ylo;
        return margin + (-ly) / yspan * (height - 2 * margin);
    };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::svg_num(width) << "\" height=\""
        << detail::svg_num(height) << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width - 2 * margin << "\" height=\""
        << height - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& c = curves[k].second;
        const auto x = c.support();
        const auto s = c.survival();
        std::string points = detail::svg_num(px(x[0])) + "," + detail::svg_num(py(1.0));
        for (std::size_t i = 0; i < x.size(); ++i) {
            points += " " + detail::svg_num(px(x[i])) + "," + detail::svg_num(py(i ? s[i - 1] : 1.0));
            if (s[i] > 0.0) points += " " + detail::svg_num(px(x[i])) + "," + detail::svg_num(py(s[i]));
            if (i + 1 < x.size() && s[i] > 0.0) {
                points += " " + detail::svg_num(px(x[i + 1])) + "," + detail::svg_num(py(s[i]));
            }
        }
        const char* colour = palette[k % (sizeof palette / sizeof *palette)];
        svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" points=\"" << points << "\"/>\n";
        svg << "<text x=\"" << detail::svg_num(width - margin - 4) << "\" y=\""
            << detail::svg_num(margin + 14 * static_cast<double>(k + 1)) << "\" font-size=\"11\" fill=\"" << colour
            << "\" text-anchor=\"end\">" << curves[k].first << "</text>\n";
    }
    svg << "<text x=\"" << detail::svg_num(width / 2) << "\" y=\"" << detail::svg_num(height - 12)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << (logx ? "IET (log)" : "IET") << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace teg
