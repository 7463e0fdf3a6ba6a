// lzca: evolve elementary cellular automata and measure LZ78 complexity.
//
// Exit codes: 0 success, 2 usage error, 3 data/parse error, 4 capability
// error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lzca/analysis.hpp"
#include "lzca/cts.hpp"
#include "lzca/error.hpp"
#include "lzca/ether.hpp"
#include "lzca/evolution.hpp"
#include "lzca/experiment.hpp"
#include "lzca/io.hpp"
#include "lzca/lz78.hpp"
#include "lzca/plot.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitCapability = 4;

lzca::Region parse_region(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw lzca::UsageError("region must be START:LEN, got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        const auto start = std::stoull(text.substr(0, colon), &used);
        if (used != colon) {
            throw std::invalid_argument("start");
        }
        const auto len_text = text.substr(colon + 1);
        const auto length = std::stoull(len_text, &used);
        if (used != len_text.size()) {
            throw std::invalid_argument("length");
        }
        return lzca::Region{static_cast<std::size_t>(start), static_cast<std::size_t>(length)};
    } catch (const std::logic_error&) {
        throw lzca::UsageError("region must be START:LEN with non-negative integers, got '" + text + "'");
    }
}

// Flags shared by commands that build an initial configuration.
struct InitialFlags {
    std::size_t width = 65900;
    std::uint64_t seed = 0;
    double density = 0.5;
    std::string input;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--width", width, "Cells in a random initial configuration")->capture_default_str();
        cmd.add_option("--seed", seed, "Seed for the random initial configuration")->capture_default_str();
        cmd.add_option("--density", density, "Probability of a 1 in the random configuration")
            ->capture_default_str();
        cmd.add_option("--input", input, "Load the initial configuration from a .cfg file");
    }

    lzca::InitialSource source() const {
        if (!input.empty()) {
            return lzca::FileInitial{input};
        }
        return lzca::RandomInitial{width, density, seed};
    }
};

void print_metadata(std::ostream& os, const lzca::Metadata& meta) {
    for (const auto& [k, v] : meta) {
        os << "# " << k << ": " << v << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elementary cellular automaton simulator and LZ78 complexity analyzer"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lzca::kVersion));

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a configuration and write the result as .cfg");
    InitialFlags evolve_init;
    evolve_init.add_to(*evolve_cmd);
    int evolve_rule = 110;
    std::uint64_t evolve_steps = 0, evolve_stride = 1;
    std::string evolve_out;
    bool evolve_spacetime = false;
    evolve_cmd->add_option("--rule", evolve_rule, "ECA rule number")->capture_default_str();
    evolve_cmd->add_option("--steps", evolve_steps, "Number of steps")->capture_default_str();
    evolve_cmd->add_option("--stride", evolve_stride, "Record every K steps (with --spacetime)")->capture_default_str();
    evolve_cmd->add_option("--out", evolve_out, "Output path (default stdout)");
    evolve_cmd->add_flag("--spacetime", evolve_spacetime, "Write every recorded row, one per line");

    // lz
    auto* lz_cmd = app.add_subcommand("lz", "LZ78 phrase count of a configuration or bit string");
    std::string lz_input, lz_bits, lz_region;
    bool lz_phrases = false;
    lz_cmd->add_option("--input", lz_input, ".cfg file to measure");
    lz_cmd->add_option("--bits", lz_bits, "Literal 0/1 string to measure");
    lz_cmd->add_option("--region", lz_region, "Measure only cells START:LEN");
    lz_cmd->add_flag("--phrases", lz_phrases, "Print the phrases, one per line, before the count");

    // cts
    auto* cts_cmd = app.add_subcommand("cts", "Cyclic tag system interpreter");
    cts_cmd->require_subcommand(1);
    auto* cts_run_cmd = cts_cmd->add_subcommand("run", "Run a CTS description; print one word per line");
    std::string cts_file;
    std::uint64_t cts_steps = lzca::kDefaultCtsMaxSteps;
    std::size_t cts_cap = lzca::kDefaultCtsStoredSymbols;
    bool cts_lengths = false;
    cts_run_cmd->add_option("file", cts_file, "CTS description file")->required();
    cts_run_cmd->add_option("--steps", cts_steps, "Maximum number of steps")->capture_default_str();
    cts_run_cmd->add_option("--max-symbols", cts_cap, "Stored-symbol cap before printing lengths only")
        ->capture_default_str();
    cts_run_cmd->add_flag("--lengths", cts_lengths, "Print word lengths instead of words");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Evolve and write LZ complexity series as CSV (+SVG)");
    InitialFlags an_init;
    an_init.add_to(*analyze_cmd);
    lzca::ExperimentSpec an;
    std::optional<std::uint64_t> an_steps;
    std::optional<std::size_t> an_sections;
    std::vector<std::string> an_regions;
    bool an_no_ts = false, an_no_svg = false;
    std::string an_out = "complexity.csv";
    analyze_cmd->add_option("--rule", an.rule_number, "ECA rule number")->capture_default_str();
    analyze_cmd->add_option("--steps", an_steps, "Last step (alias of --to)");
    analyze_cmd->add_option("--from", an.from_step, "First recorded step")->capture_default_str();
    analyze_cmd->add_option("--to", an.to_step, "Last recorded step");
    analyze_cmd->add_option("--stride", an.stride, "Record every K steps")->capture_default_str();
    analyze_cmd->add_option("--sections", an_sections, "Split the row into N sections");
    analyze_cmd->add_option("--region", an_regions, "Measure region START:LEN (repeatable)");
    analyze_cmd->add_option("--period", an.smoothing_period, "Moving-average period (0 = none)")
        ->capture_default_str();
    analyze_cmd->add_option("--out", an_out, "Raw CSV path")->capture_default_str();
    analyze_cmd->add_option("--threads", an.threads, "Worker threads (0 = all cores)");
    analyze_cmd->add_flag("--no-timestamp", an_no_ts, "Omit the timestamp metadata line");
    analyze_cmd->add_flag("--no-svg", an_no_svg, "Do not write SVG plots");
    analyze_cmd->add_flag("--gnuplot", an.gnuplot, "Also write gnuplot scripts");

    // ether
    auto* ether_cmd = app.add_subcommand("ether", "Search for a periodic background tile");
    int ether_rule = 110;
    std::size_t ether_spatial = 14, ether_temporal = 7, ether_width = 0;
    std::string ether_coverage_file, ether_out;
    ether_cmd->add_option("--rule", ether_rule, "ECA rule number")->capture_default_str();
    ether_cmd->add_option("--spatial", ether_spatial, "Spatial period (<= 20)")->capture_default_str();
    ether_cmd->add_option("--temporal", ether_temporal, "Temporal period")->capture_default_str();
    ether_cmd->add_option("--coverage", ether_coverage_file, "Report tile coverage of this .cfg file");
    ether_cmd->add_option("--width", ether_width, "With --out: width of the tiled configuration");
    ether_cmd->add_option("--out", ether_out, "Write the tile repeated to --width cells as .cfg");

    // plot
    auto* plot_cmd = app.add_subcommand("plot", "Render a series CSV as SVG");
    std::string plot_csv, plot_out, plot_title;
    std::vector<std::string> plot_columns;
    plot_cmd->add_option("csv", plot_csv, "Series CSV")->required();
    plot_cmd->add_option("--out", plot_out, "SVG path")->required();
    plot_cmd->add_option("--columns", plot_columns, "Columns to draw (default all)")->delimiter(',');
    plot_cmd->add_option("--title", plot_title, "Chart title");

    // reproduce-paper
    auto* repro_cmd = app.add_subcommand("reproduce-paper",
                                         "Whole-row, smoothed, per-section and section-part series for a .cfg");
    lzca::ReproductionSpec repro;
    std::string repro_input, repro_out = "reproduction";
    std::vector<std::string> repro_regions;
    bool repro_no_ts = false;
    repro_cmd->add_option("file", repro_input, "Initial configuration (.cfg)")->required();
    repro_cmd->add_option("--out", repro_out, "Output directory")->capture_default_str();
    repro_cmd->add_option("--rule", repro.rule_number, "ECA rule number")->capture_default_str();
    repro_cmd->add_option("--steps", repro.steps, "Last step")->capture_default_str();
    repro_cmd->add_option("--period", repro.smoothing_period, "Moving-average period")->capture_default_str();
    repro_cmd->add_option("--sections", repro.sections, "Number of sections")->capture_default_str();
    repro_cmd->add_option("--region", repro_regions, "Part region START:LEN (repeatable; replaces defaults)");
    repro_cmd->add_option("--from", repro.parts_from, "First step of the part window")->capture_default_str();
    repro_cmd->add_option("--threads", repro.threads, "Worker threads (0 = all cores)");
    repro_cmd->add_flag("--no-timestamp", repro_no_ts, "Omit the timestamp metadata line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*evolve_cmd) {
            const auto rule = lzca::make_rule_table(evolve_rule);
            const auto source = evolve_init.source();
            const auto initial = lzca::materialize_initial(source);
            std::ofstream file;
            if (!evolve_out.empty()) {
                file.open(evolve_out, std::ios::binary);
                if (!file) {
                    throw lzca::IoError("cannot write " + evolve_out);
                }
            }
            std::ostream& os = evolve_out.empty() ? std::cout : file;
            print_metadata(std::cerr, {{"rule", std::to_string(evolve_rule)},
                                       {"width", std::to_string(initial.width())},
                                       {"steps", std::to_string(evolve_steps)},
                                       {"seed", evolve_init.input.empty() ? std::to_string(evolve_init.seed) : "-"}});
            if (evolve_spacetime) {
                lzca::for_each_recorded_step(initial, rule, 0, evolve_steps, evolve_stride,
                                             [&os](std::uint64_t, const lzca::Configuration& row) {
                                                 os << row.to_string() << '\n';
                                             });
            } else {
                lzca::write_configuration(os, lzca::advance(initial, rule, evolve_steps));
            }
        } else if (*lz_cmd) {
            if (lz_input.empty() == lz_bits.empty()) {
                throw lzca::UsageError("give exactly one of --input or --bits");
            }
            const auto row = lz_input.empty() ? lzca::Configuration::from_string(lz_bits)
                                              : lzca::load_configuration(lz_input);
            lzca::Region region{0, row.width()};
            if (!lz_region.empty()) {
                region = parse_region(lz_region);
                lzca::check_region(region, row.width());
            }
            if (lz_phrases) {
                for (const auto& p : lzca::lz78_parse(row.to_string(region.start_x, region.length)).phrases) {
                    std::cout << p << '\n';
                }
            }
            std::cout << lzca::lz78_phrase_count(row, region.start_x, region.length) << '\n';
        } else if (*cts_run_cmd) {
            const auto desc = lzca::load_cts_description(cts_file);
            const auto trace = lzca::cts_run(desc.initial, desc.system, cts_steps, cts_cap);
            if (cts_lengths) {
                for (const auto n : trace.lengths) {
                    std::cout << n << '\n';
                }
            } else {
                for (const auto& w : trace.words) {
                    std::cout << w << '\n';
                }
                if (trace.words_truncated) {
                    std::cerr << "word storage cap reached after " << trace.words.size()
                              << " words; rerun with --lengths\n";
                }
            }
            if (trace.halted) {
                std::cerr << "halted at step " << trace.final_step << '\n';
            }
        } else if (*analyze_cmd) {
            an.initial = an_init.source();
            if (an_steps) {
                an.to_step = *an_steps;
            }
            if (an_sections && !an_regions.empty()) {
                throw lzca::UsageError("--sections and --region are mutually exclusive");
            }
            if (an_sections) {
                an.analysis = lzca::AnalysisKind::sections;
                an.sections = *an_sections;
            } else if (!an_regions.empty()) {
                an.analysis = lzca::AnalysisKind::regions;
                for (const auto& r : an_regions) {
                    an.regions.push_back(parse_region(r));
                }
            }
            an.out = an_out;
            an.timestamp = !an_no_ts;
            an.svg = !an_no_svg;
            const auto result = lzca::run_experiment(an);
            for (const auto& p : result.artifacts) {
                std::cout << p.string() << '\n';
            }
        } else if (*ether_cmd) {
            const auto rule = lzca::make_rule_table(ether_rule);
            const auto tile = lzca::find_ether_tile(rule, ether_spatial, ether_temporal);
            if (!tile) {
                std::cout << "no non-uniform tile with spatial period " << ether_spatial << " and temporal period "
                          << ether_temporal << '\n';
                return 0;
            }
            std::cout << "# rule: " << ether_rule << '\n'
                      << "# spatial_period: " << tile->spatial_period << '\n'
                      << "# temporal_period: " << tile->temporal_period << '\n'
                      << "# shift_per_period: " << tile->shift_per_period << '\n';
            for (const auto& r : tile->rows) {
                std::cout << r.to_string() << '\n';
            }
            if (!ether_coverage_file.empty()) {
                const auto row = lzca::load_configuration(ether_coverage_file);
                std::cout << "coverage " << lzca::format_number(lzca::ether_coverage(row, *tile)) << '\n';
            }
            if (!ether_out.empty()) {
                if (ether_width == 0) {
                    throw lzca::UsageError("--out needs --width");
                }
                lzca::save_configuration(ether_out, tile->tiled(ether_width));
            }
        } else if (*plot_cmd) {
            const auto table = lzca::load_series_csv(plot_csv);
            std::vector<lzca::PlotSeries> series;
            for (std::size_t i = 0; i < table.names.size(); ++i) {
                if (!plot_columns.empty() &&
                    std::find(plot_columns.begin(), plot_columns.end(), table.names[i]) == plot_columns.end()) {
                    continue;
                }
                series.push_back({table.names[i], table.steps, table.columns[i]});
            }
            if (series.empty()) {
                throw lzca::UsageError("no matching columns to plot");
            }
            lzca::PlotOptions opts;
            opts.title = plot_title;
            lzca::emit_plot(series, plot_out, opts);
        } else if (*repro_cmd) {
            repro.initial = repro_input;
            repro.out_dir = repro_out;
            repro.timestamp = !repro_no_ts;
            if (!repro_regions.empty()) {
                repro.parts.clear();
                for (const auto& r : repro_regions) {
                    repro.parts.push_back(parse_region(r));
                }
            }
            for (const auto& p : lzca::reproduce_paper(repro)) {
                std::cout << p.string() << '\n';
            }
        }
    } catch (const lzca::CapabilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapability;
    } catch (const lzca::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const lzca::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const lzca::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lzca::RangeError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
