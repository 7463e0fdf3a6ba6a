#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lzca/analysis.hpp"
#include "lzca/configuration.hpp"

namespace lzca {

// .cfg text: '0'/'1' digits, whitespace ignored, cell 0 first. Throws
// ParseError carrying the byte offset of an illegal character, or "zero
// digits" when no digit is present.
Configuration parse_configuration(std::string_view text);
Configuration load_configuration(const std::filesystem::path& path);
void write_configuration(std::ostream& out, const Configuration& config, std::size_t line_width = 100);
void save_configuration(const std::filesystem::path& path, const Configuration& config,
                        std::size_t line_width = 100);

using Metadata = std::vector<std::pair<std::string, std::string>>;

// Shortest round-trip decimal form ("6068", "1.5").
std::string format_number(double value);

// '#'-prefixed "key: value" metadata lines, then the header
// "step,<name0>,<name1>,..." and one row per step. All columns must share
// start step, stride and length.
void write_series_csv(std::ostream& out, const std::vector<ComplexitySeries>& columns,
                      const std::vector<std::string>& names, const Metadata& metadata);

struct SeriesTable {
    Metadata metadata;
    std::vector<std::string> names;
    std::vector<double> steps;
    std::vector<std::vector<double>> columns;
};

// Inverse of write_series_csv. Throws ParseError on schema violations
// (missing header, ragged rows, non-numeric cells, first header cell not
// "step", non-increasing steps).
SeriesTable parse_series_csv(std::string_view text);
SeriesTable load_series_csv(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

} // namespace lzca
