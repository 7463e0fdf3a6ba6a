#include "lzca/analysis.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "lzca/error.hpp"
#include "lzca/lz78.hpp"

namespace lzca {

void check_region(const Region& region, std::size_t width) {
    if (region.start_x > width || region.length > width - region.start_x) {
        throw RangeError("region " + std::to_string(region.start_x) + ":" + std::to_string(region.length) +
                         " exceeds width " + std::to_string(width));
    }
}

ComplexitySeries complexity_series(const SpacetimeRecording& recording, std::optional<Region> region,
                                   unsigned threads) {
    const Region r = region.value_or(Region{0, recording.width});
    check_region(r, recording.width);

    ComplexitySeries series;
    series.start_step = recording.start_step;
    series.stride = recording.stride;
    series.region = region;
    series.values.assign(recording.rows.size(), 0.0);

    const std::size_t n = recording.rows.size();
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 16));

    auto work = [&](std::size_t begin, std::size_t end) {
        Lz78Counter counter;
        for (std::size_t i = begin; i < end; ++i) {
            series.values[i] = static_cast<double>(counter.count(recording.rows[i], r.start_x, r.length));
        }
    };
    if (workers <= 1) {
        work(0, n);
        return series;
    }
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t begin = 0; begin < n; begin += chunk) {
            pool.emplace_back(work, begin, std::min(n, begin + chunk));
        }
    }
    return series;
}

std::vector<Region> section_boundaries(std::size_t width, std::size_t n_sections) {
    if (n_sections == 0 || n_sections > width) {
        throw UsageError("section count must lie in 1..width");
    }
    const std::size_t base = width / n_sections;
    const std::size_t extra = width % n_sections;
    std::vector<Region> out;
    out.reserve(n_sections);
    std::size_t x = 0;
    for (std::size_t i = 0; i < n_sections; ++i) {
        const std::size_t len = base + (i < extra ? 1 : 0);
        out.push_back(Region{x, len});
        x += len;
    }
    return out;
}

ComplexitySeries moving_average(const ComplexitySeries& series, std::size_t period) {
    const std::size_t n = series.values.size();
    if (period == 0 || period > n) {
        throw UsageError("moving-average period must lie in 1..series length");
    }
    ComplexitySeries out;
    out.start_step = series.start_step + (period - 1) * series.stride;
    out.stride = series.stride;
    out.region = series.region;
    out.values.reserve(n - period + 1);
    // Exact window sums: phrase counts are integers well below 2^53, so the
    // running sum never rounds. Non-integral inputs are re-summed per window.
    const bool integral = std::all_of(series.values.begin(), series.values.end(),
                                      [](double v) { return v == static_cast<double>(static_cast<long long>(v)); });
    const auto p = static_cast<double>(period);
    if (integral) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sum += series.values[i];
            if (i >= period) {
                sum -= series.values[i - period];
            }
            if (i + 1 >= period) {
                out.values.push_back(sum / p);
            }
        }
    } else {
        for (std::size_t i = period - 1; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t j = i + 1 - period; j <= i; ++j) {
                sum += series.values[j];
            }
            out.values.push_back(sum / p);
        }
    }
    return out;
}

std::vector<DropEvent> detect_drops(const ComplexitySeries& series, std::size_t window, double min_drop) {
    if (window == 0) {
        throw UsageError("drop-detection window must be at least 1");
    }
    if (!(min_drop > 0.0 && min_drop < 1.0)) {
        throw UsageError("min_drop must lie in (0, 1)");
    }
    std::vector<DropEvent> events;
    if (series.values.size() < window) {
        return events;
    }
    const ComplexitySeries smooth = moving_average(series, window);
    const auto& v = smooth.values;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double threshold = min_drop * (*hi - *lo);
    if (threshold <= 0.0) {
        return events;
    }
    std::size_t i = 0;
    while (i + 1 < v.size()) {
        if (!(v[i + 1] < v[i])) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j + 1 < v.size() && v[j + 1] < v[j]) {
            ++j;
        }
        const double fall = v[i] - v[j];
        if (fall >= threshold) {
            events.push_back(DropEvent{smooth.step_at(i), smooth.step_at(j), fall});
        }
        i = j;
    }
    return events;
}

} // namespace lzca
