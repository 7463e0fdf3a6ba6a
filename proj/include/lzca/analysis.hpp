#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lzca/evolution.hpp"

namespace lzca {

// Contiguous run of cells [start_x, start_x + length).
struct Region {
    std::size_t start_x = 0;
    std::size_t length = 0;

    std::size_t end_x() const noexcept { return start_x + length; }
    friend bool operator==(const Region&, const Region&) = default;
};

// Throws RangeError if `region` does not fit in `width` cells.
void check_region(const Region& region, std::size_t width);

// values[i] belongs to step start_step + i * stride. `region` is empty for
// whole-row series.
struct ComplexitySeries {
    std::uint64_t start_step = 0;
    std::uint64_t stride = 1;
    std::vector<double> values;
    std::optional<Region> region;

    std::uint64_t step_at(std::size_t i) const noexcept { return start_step + i * stride; }
    std::size_t size() const noexcept { return values.size(); }
};

// LZ78 phrase count of the region (or the whole row) for every recorded row.
// Rows are split across `threads` workers (0 = hardware concurrency).
ComplexitySeries complexity_series(const SpacetimeRecording& recording, std::optional<Region> region = std::nullopt,
                                   unsigned threads = 0);

// n contiguous sections left to right; the first width % n get one extra
// cell. Throws UsageError unless 1 <= n <= width.
std::vector<Region> section_boundaries(std::size_t width, std::size_t n_sections);

// Trailing simple moving average: out[i] = mean(values[i .. i + period - 1]),
// attributed to the last step of the window. Throws UsageError unless
// 1 <= period <= series length.
ComplexitySeries moving_average(const ComplexitySeries& series, std::size_t period);

// A decline from begin_step to end_step.
struct DropEvent {
    std::uint64_t begin_step = 0;
    std::uint64_t end_step = 0;
    double magnitude = 0.0;

    friend bool operator==(const DropEvent&, const DropEvent&) = default;
};

// Smooths with a trailing average of `window`, then reports every maximal
// strictly decreasing run whose total fall is at least
// min_drop * (max - min) of the smoothed series. Any flat or rising step
// ends a run. Series shorter than `window` yield no events.
std::vector<DropEvent> detect_drops(const ComplexitySeries& series, std::size_t window, double min_drop);

} // namespace lzca
