#include "lzca/experiment.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "lzca/error.hpp"
#include "lzca/evolution.hpp"
#include "lzca/plot.hpp"

namespace lzca {

namespace {

constexpr std::size_t kBatchRows = 256;

std::string describe_initial(const InitialSource& initial) {
    if (const auto* r = std::get_if<RandomInitial>(&initial)) {
        return "random density=" + format_number(r->density) + " seed=" + std::to_string(r->seed) +
               " generator=mt19937_64";
    }
    return "file " + std::get<FileInitial>(initial).path.string();
}

std::string describe_regions(const std::vector<Region>& regions) {
    std::string out;
    for (const auto& r : regions) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(r.start_x) + ":" + std::to_string(r.length);
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::filesystem::path with_suffix(const std::filesystem::path& csv, const std::string& suffix,
                                  const std::string& extension) {
    auto p = csv;
    p.replace_filename(csv.stem().string() + suffix + extension);
    return p;
}

// Tracks artifacts and deletes them unless committed.
class ArtifactSet {
  public:
    ArtifactSet() = default;
    ArtifactSet(const ArtifactSet&) = delete;
    ArtifactSet& operator=(const ArtifactSet&) = delete;
    ~ArtifactSet() {
        if (!committed_) {
            for (const auto& p : paths_) {
                std::error_code ec;
                std::filesystem::remove(p, ec);
            }
        }
    }

    void write(const std::filesystem::path& path, const std::string& content) {
        paths_.push_back(path);
        std::ofstream out(path, std::ios::binary);
        if (!out || !(out << content) || !out.flush()) {
            throw IoError("cannot write " + path.string());
        }
    }

    std::vector<std::filesystem::path> commit() {
        committed_ = true;
        return paths_;
    }

  private:
    std::vector<std::filesystem::path> paths_;
    bool committed_ = false;
};

std::string csv_text(const std::vector<ComplexitySeries>& columns, const std::vector<std::string>& names,
                     const Metadata& metadata) {
    std::ostringstream out;
    write_series_csv(out, columns, names, metadata);
    return out.str();
}

std::vector<PlotSeries> plot_series(const std::vector<ComplexitySeries>& columns,
                                    const std::vector<std::string>& names) {
    std::vector<PlotSeries> out;
    for (std::size_t k = 0; k < columns.size(); ++k) {
        PlotSeries p;
        p.label = names[k];
        p.values = columns[k].values;
        p.steps.reserve(columns[k].size());
        for (std::size_t i = 0; i < columns[k].size(); ++i) {
            p.steps.push_back(static_cast<double>(columns[k].step_at(i)));
        }
        out.push_back(std::move(p));
    }
    return out;
}

// CSV plus optional SVG/gnuplot companions.
void write_table(ArtifactSet& artifacts, const std::filesystem::path& csv, const std::vector<ComplexitySeries>& columns,
                 const std::vector<std::string>& names, const Metadata& metadata, const std::string& title, bool svg,
                 bool gnuplot) {
    artifacts.write(csv, csv_text(columns, names, metadata));
    PlotOptions opts;
    opts.title = title;
    if (svg) {
        std::string body = render_svg(plot_series(columns, names), opts);
        std::string comment = "<!--\n";
        for (const auto& [k, v] : metadata) {
            comment += k + ": " + v + "\n";
        }
        comment += "-->\n";
        body.insert(body.find('\n') + 1, comment);
        artifacts.write(with_suffix(csv, "", ".svg"), body);
    }
    if (gnuplot) {
        std::string script;
        for (const auto& [k, v] : metadata) {
            script += "# " + k + ": " + v + "\n";
        }
        script += render_gnuplot_script(csv, names, opts);
        artifacts.write(with_suffix(csv, "", ".gp"), script);
    }
}

} // namespace

Configuration materialize_initial(const InitialSource& initial) {
    if (const auto* r = std::get_if<RandomInitial>(&initial)) {
        return random_configuration(r->width, r->density, r->seed);
    }
    return load_configuration(std::get<FileInitial>(initial).path);
}

std::vector<ComplexitySeries> stream_complexity(const Configuration& initial, const RuleTable& rule,
                                                std::uint64_t from, std::uint64_t to, std::uint64_t stride,
                                                const std::vector<Region>& regions, unsigned threads) {
    for (const auto& r : regions) {
        check_region(r, initial.width());
    }
    std::vector<ComplexitySeries> out(regions.size());
    for (std::size_t k = 0; k < regions.size(); ++k) {
        out[k].start_step = from;
        out[k].stride = stride;
        out[k].region = regions[k];
    }
    SpacetimeRecording batch;
    batch.width = initial.width();
    batch.stride = stride;
    auto flush = [&] {
        for (std::size_t k = 0; k < regions.size(); ++k) {
            const auto part = complexity_series(batch, regions[k], threads);
            out[k].values.insert(out[k].values.end(), part.values.begin(), part.values.end());
        }
        batch.rows.clear();
    };
    for_each_recorded_step(initial, rule, from, to, stride, [&](std::uint64_t t, const Configuration& row) {
        if (batch.rows.empty()) {
            batch.start_step = t;
        }
        batch.rows.push_back(row);
        if (batch.rows.size() == kBatchRows) {
            flush();
        }
    });
    if (!batch.rows.empty()) {
        flush();
    }
    return out;
}

ComplexitySeries slice_steps(const ComplexitySeries& series, std::uint64_t from, std::uint64_t to) {
    ComplexitySeries out;
    out.stride = series.stride;
    out.region = series.region;
    out.start_step = from;
    bool started = false;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto t = series.step_at(i);
        if (t < from || t > to) {
            continue;
        }
        if (!started) {
            out.start_step = t;
            started = true;
        }
        out.values.push_back(series.values[i]);
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    const RuleTable rule = make_rule_table(spec.rule_number);
    if (spec.to_step < spec.from_step) {
        throw UsageError("--to precedes --from");
    }
    if (spec.stride == 0) {
        throw UsageError("stride must be at least 1");
    }
    const Configuration initial = materialize_initial(spec.initial);
    const std::size_t width = initial.width();

    ExperimentResult result;
    result.width = width;
    std::vector<Region> regions;
    switch (spec.analysis) {
    case AnalysisKind::whole:
        regions = {Region{0, width}};
        result.names = {"value"};
        break;
    case AnalysisKind::sections:
        regions = section_boundaries(width, spec.sections);
        for (std::size_t i = 0; i < regions.size(); ++i) {
            result.names.push_back("section_" + std::to_string(i));
        }
        break;
    case AnalysisKind::regions:
        if (spec.regions.empty()) {
            throw UsageError("region analysis needs at least one region");
        }
        regions = spec.regions;
        for (const auto& r : regions) {
            result.names.push_back("x" + std::to_string(r.start_x) + "_" + std::to_string(r.length));
        }
        break;
    }
    for (const auto& r : regions) {
        check_region(r, width);
    }
    const std::size_t recorded = static_cast<std::size_t>((spec.to_step - spec.from_step) / spec.stride + 1);
    if (spec.smoothing_period > recorded) {
        throw UsageError("smoothing period exceeds the number of recorded steps");
    }

    result.raw = stream_complexity(initial, rule, spec.from_step, spec.to_step, spec.stride, regions, spec.threads);
    if (spec.analysis == AnalysisKind::whole) {
        result.raw.front().region.reset();
    }

    Metadata meta = {
        {"generator", std::string("lzca ") + kVersion},
        {"rule", std::to_string(spec.rule_number)},
        {"width", std::to_string(width)},
        {"initial", describe_initial(spec.initial)},
        {"steps", std::to_string(spec.from_step) + ".." + std::to_string(spec.to_step)},
        {"stride", std::to_string(spec.stride)},
        {"analysis", spec.analysis == AnalysisKind::whole      ? std::string("whole")
                     : spec.analysis == AnalysisKind::sections ? "sections " + std::to_string(spec.sections)
                                                               : std::string("regions")},
        {"regions", describe_regions(regions)},
        {"period", std::to_string(spec.smoothing_period)},
    };
    if (spec.timestamp) {
        meta.emplace_back("timestamp", utc_timestamp());
    }

    ArtifactSet artifacts;
    Metadata raw_meta = meta;
    raw_meta.emplace_back("series", "LZ78 phrase count");
    write_table(artifacts, spec.out, result.raw, result.names, raw_meta, "LZ complexity", spec.svg, spec.gnuplot);

    if (spec.smoothing_period > 1) {
        for (const auto& s : result.raw) {
            result.smoothed.push_back(moving_average(s, spec.smoothing_period));
        }
        Metadata ma_meta = meta;
        ma_meta.emplace_back("series", "trailing moving average of LZ78 phrase count, period " +
                                           std::to_string(spec.smoothing_period));
        write_table(artifacts, with_suffix(spec.out, "_ma" + std::to_string(spec.smoothing_period), ".csv"),
                    result.smoothed, result.names, ma_meta,
                    "LZ complexity, moving average " + std::to_string(spec.smoothing_period), spec.svg, spec.gnuplot);
    }
    result.artifacts = artifacts.commit();
    return result;
}

std::vector<std::filesystem::path> reproduce_paper(const ReproductionSpec& spec) {
    const RuleTable rule = make_rule_table(spec.rule_number);
    const Configuration initial = load_configuration(spec.initial);
    const std::size_t width = initial.width();
    if (spec.parts_from > spec.steps) {
        throw UsageError("part window starts after the last step");
    }
    if (spec.smoothing_period == 0 || spec.smoothing_period > spec.steps - spec.parts_from + 1) {
        throw UsageError("smoothing period must lie in 1..(length of the part window)");
    }
    const auto sections = section_boundaries(width, spec.sections);
    for (const auto& r : spec.parts) {
        check_region(r, width);
    }

    std::vector<Region> regions{Region{0, width}};
    regions.insert(regions.end(), sections.begin(), sections.end());
    regions.insert(regions.end(), spec.parts.begin(), spec.parts.end());
    const auto all = stream_complexity(initial, rule, 0, spec.steps, 1, regions, spec.threads);

    std::vector<ComplexitySeries> whole{all[0]};
    whole[0].region.reset();
    const std::vector<ComplexitySeries> section_series(all.begin() + 1,
                                                       all.begin() + 1 + static_cast<std::ptrdiff_t>(sections.size()));
    std::vector<ComplexitySeries> part_series;
    for (std::size_t i = 1 + sections.size(); i < all.size(); ++i) {
        part_series.push_back(slice_steps(all[i], spec.parts_from, spec.steps));
    }
    std::vector<std::string> section_names, part_names;
    for (std::size_t i = 0; i < sections.size(); ++i) {
        section_names.push_back("section_" + std::to_string(i));
    }
    for (const auto& r : spec.parts) {
        part_names.push_back("x" + std::to_string(r.start_x) + "_" + std::to_string(r.start_x + r.length - 1));
    }

    auto smooth = [&](const std::vector<ComplexitySeries>& cols) {
        std::vector<ComplexitySeries> out;
        for (const auto& c : cols) {
            out.push_back(moving_average(c, spec.smoothing_period));
        }
        return out;
    };

    const std::string p = std::to_string(spec.smoothing_period);
    Metadata meta = {
        {"generator", std::string("lzca ") + kVersion},
        {"pipeline", "reproduce-paper"},
        {"rule", std::to_string(spec.rule_number)},
        {"width", std::to_string(width)},
        {"initial", "file " + spec.initial.string()},
        {"steps", "0.." + std::to_string(spec.steps)},
        {"stride", "1"},
        {"period", p},
        {"sections", std::to_string(spec.sections) + " [" + describe_regions(sections) + "]"},
        {"parts", describe_regions(spec.parts) + " over steps " + std::to_string(spec.parts_from) + ".." +
                      std::to_string(spec.steps)},
    };
    if (spec.timestamp) {
        meta.emplace_back("timestamp", utc_timestamp());
    }
    auto tagged = [&](const std::string& series) {
        Metadata m = meta;
        m.emplace_back("series", series);
        return m;
    };

    std::filesystem::create_directories(spec.out_dir);
    ArtifactSet artifacts;
    const auto dir = spec.out_dir;
    write_table(artifacts, dir / "whole.csv", whole, {"value"}, tagged("whole-row LZ78 phrase count"),
                "Whole-row LZ complexity", true, false);
    write_table(artifacts, dir / ("whole_ma" + p + ".csv"), smooth(whole), {"value"},
                tagged("whole-row moving average, period " + p), "Whole-row LZ complexity, moving average " + p, true,
                false);
    write_table(artifacts, dir / "sections.csv", section_series, section_names, tagged("per-section LZ78 phrase count"),
                "Per-section LZ complexity", true, false);
    write_table(artifacts, dir / ("sections_ma" + p + ".csv"), smooth(section_series), section_names,
                tagged("per-section moving average, period " + p), "Per-section LZ complexity, moving average " + p,
                true, false);
    write_table(artifacts, dir / "parts.csv", part_series, part_names, tagged("section-part LZ78 phrase count"),
                "Section parts LZ complexity", true, false);
    write_table(artifacts, dir / ("parts_ma" + p + ".csv"), smooth(part_series), part_names,
                tagged("section-part moving average, period " + p), "Section parts LZ complexity, moving average " + p,
                true, false);
    return artifacts.commit();
}

} // namespace lzca
