#include "lzca/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lzca/error.hpp"
#include "lzca/io.hpp"

namespace lzca {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fixed2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
            return m * mag;
        }
    }
    return 10.0 * mag;
}

} // namespace

std::vector<std::size_t> decimate_indices(std::span<const double> values, std::size_t max_segments) {
    if (max_segments < 3) {
        throw UsageError("decimation needs at least 3 segments");
    }
    const std::size_t n = values.size();
    std::vector<std::size_t> keep;
    if (n <= max_segments + 1) {
        keep.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            keep[i] = i;
        }
        return keep;
    }
    const std::size_t buckets = (max_segments - 1) / 2;
    keep.push_back(0);
    for (std::size_t b = 0; b < buckets; ++b) {
        const std::size_t lo = b * n / buckets;
        const std::size_t hi = (b + 1) * n / buckets;
        const auto first = values.begin() + static_cast<std::ptrdiff_t>(lo);
        const auto last = values.begin() + static_cast<std::ptrdiff_t>(hi);
        const auto [mn, mx] = std::minmax_element(first, last);
        const auto imn = static_cast<std::size_t>(mn - values.begin());
        const auto imx = static_cast<std::size_t>(mx - values.begin());
        keep.push_back(std::min(imn, imx));
        keep.push_back(std::max(imn, imx));
    }
    keep.push_back(n - 1);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return keep;
}

std::string render_svg(const std::vector<PlotSeries>& series, const PlotOptions& options) {
    if (series.empty()) {
        throw UsageError("nothing to plot");
    }
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& s : series) {
        if (s.values.empty() || s.values.size() != s.steps.size()) {
            throw UsageError("plot series '" + s.label + "' is empty or has mismatched lengths");
        }
        const auto [x0, x1] = std::minmax_element(s.steps.begin(), s.steps.end());
        const auto [y0, y1] = std::minmax_element(s.values.begin(), s.values.end());
        xmin = std::min(xmin, *x0);
        xmax = std::max(xmax, *x1);
        ymin = std::min(ymin, *y0);
        ymax = std::max(ymax, *y1);
    }
    if (xmax == xmin) {
        xmax = xmin + 1.0;
    }
    if (ymax == ymin) {
        ymin -= 1.0;
        ymax += 1.0;
    }

    const double left = 80, right = 20, top = options.title.empty() ? 20 : 40, bottom = 60;
    const double pw = options.width - left - right;
    const double ph = options.height - top - bottom;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return top + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << options.height
        << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\" font-family=\"sans-serif\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        svg << "<text x=\"" << fixed2(options.width / 2.0) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
            << escape_xml(options.title) << "</text>\n";
    }

    svg << "<g stroke=\"#000\" stroke-width=\"1\">\n";
    svg << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(top + ph) << "\" x2=\"" << fixed2(left + pw)
        << "\" y2=\"" << fixed2(top + ph) << "\"/>\n";
    svg << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(top) << "\" x2=\"" << fixed2(left) << "\" y2=\""
        << fixed2(top + ph) << "\"/>\n";
    svg << "</g>\n";

    svg << "<g font-size=\"11\">\n";
    const double xs = nice_step(xmax - xmin, 6);
    for (double x = std::ceil(xmin / xs) * xs; x <= xmax + 1e-9 * xs; x += xs) {
        svg << "<line x1=\"" << fixed2(sx(x)) << "\" y1=\"" << fixed2(top + ph) << "\" x2=\"" << fixed2(sx(x))
            << "\" y2=\"" << fixed2(top + ph + 5) << "\" stroke=\"#000\"/>";
        svg << "<text x=\"" << fixed2(sx(x)) << "\" y=\"" << fixed2(top + ph + 18) << "\" text-anchor=\"middle\">"
            << format_number(x) << "</text>\n";
    }
    const double ys = nice_step(ymax - ymin, 5);
    for (double y = std::ceil(ymin / ys) * ys; y <= ymax + 1e-9 * ys; y += ys) {
        svg << "<line x1=\"" << fixed2(left - 5) << "\" y1=\"" << fixed2(sy(y)) << "\" x2=\"" << fixed2(left)
            << "\" y2=\"" << fixed2(sy(y)) << "\" stroke=\"#000\"/>";
        svg << "<text x=\"" << fixed2(left - 8) << "\" y=\"" << fixed2(sy(y) + 4) << "\" text-anchor=\"end\">"
            << format_number(y) << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<text x=\"" << fixed2(left + pw / 2) << "\" y=\"" << fixed2(options.height - 15.0)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << escape_xml(options.x_label) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << fixed2(top + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << fixed2(top + ph / 2) << ")\">" << escape_xml(options.y_label)
        << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" data-label=\""
            << escape_xml(s.label) << "\" points=\"";
        const auto keep = decimate_indices(s.values, options.max_segments);
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if (j) {
                svg << ' ';
            }
            svg << fixed2(sx(s.steps[keep[j]])) << ',' << fixed2(sy(s.values[keep[j]]));
        }
        svg << "\"/>\n";
    }

    if (series.size() > 1) {
        svg << "<g font-size=\"11\">\n";
        for (std::size_t k = 0; k < series.size(); ++k) {
            const double y = top + 12 + 16.0 * static_cast<double>(k);
            const double x = left + pw - 150;
            svg << "<line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(y - 4) << "\" x2=\"" << fixed2(x + 20)
                << "\" y2=\"" << fixed2(y - 4) << "\" stroke=\"" << kPalette[k % std::size(kPalette)]
                << "\" stroke-width=\"2\"/>";
            svg << "<text x=\"" << fixed2(x + 26) << "\" y=\"" << fixed2(y) << "\">" << escape_xml(series[k].label)
                << "</text>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_plot(const std::vector<PlotSeries>& series, const std::filesystem::path& path, const PlotOptions& options) {
    const std::string svg = render_svg(series, options);
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << svg)) {
        throw IoError("cannot write " + path.string());
    }
}

std::string render_gnuplot_script(const std::filesystem::path& csv, const std::vector<std::string>& columns,
                                  const PlotOptions& options) {
    std::ostringstream gp;
    gp << "set datafile separator ','\n";
    gp << "set datafile commentschars '#'\n";
    gp << "set key autotitle columnhead\n";
    gp << "set xlabel '" << options.x_label << "'\n";
    gp << "set ylabel '" << options.y_label << "'\n";
    if (!options.title.empty()) {
        gp << "set title '" << options.title << "'\n";
    }
    gp << "plot ";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) {
            gp << ", \\\n     ";
        }
        gp << "'" << csv.filename().string() << "' using 1:" << (i + 2) << " with lines title '" << columns[i] << "'";
    }
    gp << '\n';
    return gp.str();
}

} // namespace lzca
