#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace lzca {

struct PlotSeries {
    std::string label;
    std::vector<double> steps;
    std::vector<double> values;
};

struct PlotOptions {
    std::string title;
    std::string x_label = "step";
    std::string y_label = "LZ complexity";
    std::size_t max_segments = 4000;
    int width = 960;
    int height = 540;
};

// Indices to keep so that at most max_segments segments remain. The first
// and last point plus the minimum and maximum of each bucket survive, so the
// min/max envelope is unchanged at bucket resolution. Requires
// max_segments >= 3.
std::vector<std::size_t> decimate_indices(std::span<const double> values, std::size_t max_segments);

// Self-contained SVG line chart, one polyline per series, with a legend when
// more than one series is drawn. Throws UsageError on empty input.
std::string render_svg(const std::vector<PlotSeries>& series, const PlotOptions& options = {});
void emit_plot(const std::vector<PlotSeries>& series, const std::filesystem::path& path,
               const PlotOptions& options = {});

// gnuplot script plotting the named columns of a series CSV.
std::string render_gnuplot_script(const std::filesystem::path& csv, const std::vector<std::string>& columns,
                                  const PlotOptions& options = {});

} // namespace lzca
