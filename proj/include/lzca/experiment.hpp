#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "lzca/analysis.hpp"
#include "lzca/configuration.hpp"
#include "lzca/io.hpp"
#include "lzca/rule.hpp"

namespace lzca {

inline constexpr const char* kVersion = "0.3.0";

struct RandomInitial {
    std::size_t width = 65900;
    double density = 0.5;
    std::uint64_t seed = 0;
};

struct FileInitial {
    std::filesystem::path path;
};

using InitialSource = std::variant<RandomInitial, FileInitial>;

enum class AnalysisKind { whole, sections, regions };

struct ExperimentSpec {
    int rule_number = 110;
    InitialSource initial = RandomInitial{};
    std::uint64_t from_step = 0;
    std::uint64_t to_step = 0; // inclusive
    std::uint64_t stride = 1;
    AnalysisKind analysis = AnalysisKind::whole;
    std::size_t sections = 20;
    std::vector<Region> regions;
    // Periods 0 and 1 produce no smoothed artifact.
    std::size_t smoothing_period = 0;
    std::filesystem::path out = "complexity.csv";
    bool svg = true;
    bool gnuplot = false;
    bool timestamp = true;
    unsigned threads = 0;
};

struct ExperimentResult {
    std::size_t width = 0;
    std::vector<std::string> names;
    std::vector<ComplexitySeries> raw;
    std::vector<ComplexitySeries> smoothed; // empty without smoothing
    std::vector<std::filesystem::path> artifacts;
};

Configuration materialize_initial(const InitialSource& initial);

// Evolves once from `initial` and returns, for each region, the phrase-count
// series at steps from, from + stride, ..., <= to. Rows are buffered in
// batches and counted on `threads` workers.
std::vector<ComplexitySeries> stream_complexity(const Configuration& initial, const RuleTable& rule,
                                                std::uint64_t from, std::uint64_t to, std::uint64_t stride,
                                                const std::vector<Region>& regions, unsigned threads = 0);

// Restricts a series to the steps in [from, to].
ComplexitySeries slice_steps(const ComplexitySeries& series, std::uint64_t from, std::uint64_t to);

// Writes the raw CSV at spec.out, plus "<stem>_ma<P>.csv" when smoothing,
// with an SVG (and optionally a gnuplot script) beside each CSV. Every
// artifact carries the full spec as '#' metadata. On failure all artifacts
// written so far are removed and the error is rethrown.
ExperimentResult run_experiment(const ExperimentSpec& spec);

struct ReproductionSpec {
    std::filesystem::path initial;
    std::filesystem::path out_dir = "reproduction";
    int rule_number = 110;
    std::uint64_t steps = 50000;
    std::size_t smoothing_period = 100;
    std::size_t sections = 20;
    // Three 1100-cell parts of section 14 of the 65,900-cell layout.
    std::vector<Region> parts = {{46000, 1100}, {47100, 1100}, {48200, 1100}};
    std::uint64_t parts_from = 10000;
    bool timestamp = true;
    unsigned threads = 0;
};

// Whole-row series, its moving average, per-section series and the
// section-part series over [parts_from, steps], all from a single
// evolution pass. Artifacts: whole.csv, whole_ma<P>.csv, sections.csv,
// sections_ma<P>.csv, parts.csv, parts_ma<P>.csv, and an SVG per CSV.
std::vector<std::filesystem::path> reproduce_paper(const ReproductionSpec& spec);

} // namespace lzca
