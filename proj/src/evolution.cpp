#include "lzca/evolution.hpp"

#include <array>

namespace lzca {

namespace {

using Word = Configuration::Word;

// Word-parallel evaluation of an arbitrary 8-entry table: the rule is split
// on the left cell into two 4-entry functions of (center, right), each a
// mux over broadcast masks.
struct RuleMasks {
    std::array<Word, 8> m{};

    explicit RuleMasks(const RuleTable& rule) {
        for (unsigned k = 0; k < 8; ++k) {
            m[k] = rule.entries()[k] ? ~Word{0} : Word{0};
        }
    }

    Word apply(Word l, Word c, Word r) const noexcept {
        const Word nr = ~r;
        const Word low = (c & ((r & m[3]) | (nr & m[2]))) | (~c & ((r & m[1]) | (nr & m[0])));
        const Word high = (c & ((r & m[7]) | (nr & m[6]))) | (~c & ((r & m[5]) | (nr & m[4])));
        return (l & high) | (~l & low);
    }
};

} // namespace

void step_into(const Configuration& in, Configuration& out, const RuleTable& rule) {
    const std::size_t width = in.width();
    if (width < 3) {
        throw UsageError("stepping requires width >= 3");
    }
    if (out.width() != width) {
        out = Configuration(width);
    }
    const RuleMasks masks(rule);
    const auto src = in.words();
    const auto dst = out.words_mut();
    const std::size_t n = src.size();
    const std::size_t last_bit = (width - 1) % Configuration::kWordBits;
    const Word first_cell = src[0] & 1u;
    const Word last_cell = (src[n - 1] >> last_bit) & 1u;

    for (std::size_t i = 0; i < n; ++i) {
        const Word c = src[i];
        // left[x] = cell x-1, right[x] = cell x+1 (cyclic).
        const Word left = (c << 1) | (i == 0 ? last_cell : src[i - 1] >> 63);
        Word right = c >> 1;
        if (i + 1 < n) {
            right |= src[i + 1] << 63;
        } else {
            right |= first_cell << last_bit;
        }
        dst[i] = masks.apply(left, c, right);
    }
    dst[n - 1] &= out.tail_mask();
}

Configuration step(const Configuration& config, const RuleTable& rule) {
    Configuration out(config.width());
    step_into(config, out, rule);
    return out;
}

SpacetimeRecording evolve(const Configuration& config, const RuleTable& rule, std::uint64_t steps,
                          std::uint64_t record_every) {
    SpacetimeRecording rec;
    rec.width = config.width();
    rec.start_step = 0;
    rec.stride = record_every;
    if (record_every > 0) {
        rec.rows.reserve(steps / record_every + 1);
    }
    for_each_recorded_step(config, rule, 0, steps, record_every,
                           [&rec](std::uint64_t, const Configuration& row) { rec.rows.push_back(row); });
    return rec;
}

Configuration advance(Configuration config, const RuleTable& rule, std::uint64_t steps) {
    Configuration scratch(config.width());
    for (std::uint64_t t = 0; t < steps; ++t) {
        step_into(config, scratch, rule);
        std::swap(config, scratch);
    }
    return config;
}

} // namespace lzca
