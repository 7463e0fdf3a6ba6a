#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lzca/configuration.hpp"
#include "lzca/error.hpp"
#include "lzca/rule.hpp"

namespace lzca {

// One synchronous update with periodic boundary. Throws UsageError for
// width < 3.
Configuration step(const Configuration& config, const RuleTable& rule);

// As step(), writing into `out` (resized if its width differs). `out` must
// not alias `in`.
void step_into(const Configuration& in, Configuration& out, const RuleTable& rule);

// Rows recorded every `stride` steps; rows[i] is the configuration at step
// start_step + i * stride.
struct SpacetimeRecording {
    std::size_t width = 0;
    std::uint64_t start_step = 0;
    std::uint64_t stride = 1;
    std::vector<Configuration> rows;

    std::uint64_t step_of(std::size_t row) const noexcept { return start_step + row * stride; }
};

// Runs `initial` forward and calls visit(step, config) at steps
// first, first + stride, ... up to and including `last`. Steps before
// `first` are evolved without visiting. Only two rows are held in memory.
template <class Visitor>
void for_each_recorded_step(Configuration initial, const RuleTable& rule, std::uint64_t first,
                            std::uint64_t last, std::uint64_t stride, Visitor&& visit) {
    if (stride == 0) {
        throw UsageError("record stride must be at least 1");
    }
    if (last < first) {
        throw UsageError("last step precedes first step");
    }
    Configuration current = std::move(initial);
    Configuration scratch(current.width());
    for (std::uint64_t t = 0;; ++t) {
        if (t >= first && (t - first) % stride == 0) {
            visit(t, static_cast<const Configuration&>(current));
        }
        if (t == last) {
            break;
        }
        step_into(current, scratch, rule);
        std::swap(current, scratch);
    }
}

// Recording with floor(steps / record_every) + 1 rows starting at step 0.
SpacetimeRecording evolve(const Configuration& config, const RuleTable& rule, std::uint64_t steps,
                          std::uint64_t record_every = 1);

// Configuration after `steps` updates.
Configuration advance(Configuration config, const RuleTable& rule, std::uint64_t steps);

} // namespace lzca
