#include "lzca/ether.hpp"

#include <string>

#include "lzca/error.hpp"
#include "lzca/evolution.hpp"

namespace lzca {

namespace {

using Bits = std::uint64_t;

Bits low_mask(std::size_t n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

// Right rotation of an n-bit cyclic row (bit x -> bit (x + k) mod n).
Bits rotate_bits(Bits v, std::size_t k, std::size_t n) {
    k %= n;
    if (k == 0) {
        return v;
    }
    return ((v << k) | (v >> (n - k))) & low_mask(n);
}

// Single-word step for rows of up to 64 cells.
Bits step_bits(Bits c, std::size_t n, const RuleTable& rule) {
    const Bits left = rotate_bits(c, 1, n);
    const Bits right = rotate_bits(c, n - 1, n);
    Bits out = 0;
    for (unsigned k = 0; k < 8; ++k) {
        if (!rule.entries()[k]) {
            continue;
        }
        out |= ((k & 4) ? left : ~left) & ((k & 2) ? c : ~c) & ((k & 1) ? right : ~right);
    }
    return out & low_mask(n);
}

std::size_t minimal_period(Bits v, std::size_t n) {
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0 && rotate_bits(v, d, n) == v) {
            return d;
        }
    }
    return n;
}

Bits tile_bits(Bits seed, std::size_t period, std::size_t copies) {
    Bits out = 0;
    for (std::size_t i = 0; i < copies; ++i) {
        out |= seed << (i * period);
    }
    return out;
}

Configuration to_configuration(Bits v, std::size_t n) {
    Configuration c(n);
    for (std::size_t x = 0; x < n; ++x) {
        c.set(x, (v >> x) & 1u);
    }
    return c;
}

Bits to_bits(const Configuration& c) {
    Bits v = 0;
    for (std::size_t x = 0; x < c.width(); ++x) {
        v |= static_cast<Bits>(c.get(x)) << x;
    }
    return v;
}

} // namespace

Configuration EtherTile::tiled(std::size_t width, std::size_t phase) const {
    return tile_configuration(rows.at(phase % temporal_period), width);
}

std::optional<EtherTile> find_ether_tile(const RuleTable& rule, std::size_t spatial_period,
                                         std::size_t temporal_period) {
    if (spatial_period == 0 || temporal_period == 0) {
        throw UsageError("ether periods must be positive");
    }
    if (spatial_period > kMaxEtherSpatialPeriod) {
        throw CapabilityError("ether search is bounded to spatial period " + std::to_string(kMaxEtherSpatialPeriod));
    }
    const std::size_t p = spatial_period;
    const std::size_t width = 3 * p;
    const Bits seeds = Bits{1} << p;
    for (Bits seed = 1; seed + 1 < seeds; ++seed) {
        if (minimal_period(seed, p) != p) {
            continue;
        }
        const Bits start = tile_bits(seed, p, 3);
        Bits row = start;
        std::vector<Bits> history{row};
        for (std::size_t t = 0; t < temporal_period; ++t) {
            row = step_bits(row, width, rule);
            history.push_back(row);
        }
        for (std::size_t shift = 0; shift < p; ++shift) {
            if (rotate_bits(start, shift, width) != row) {
                continue;
            }
            EtherTile tile;
            tile.rule_number = rule.rule_number();
            tile.spatial_period = p;
            tile.temporal_period = temporal_period;
            tile.shift_per_period = shift;
            for (std::size_t t = 0; t < temporal_period; ++t) {
                tile.rows.push_back(to_configuration(history[t] & low_mask(p), p));
            }
            if (!verify_ether_tile(tile, rule)) {
                throw std::logic_error("ether tile failed re-verification");
            }
            return tile;
        }
    }
    return std::nullopt;
}

bool verify_ether_tile(const EtherTile& tile, const RuleTable& rule) {
    const std::size_t p = tile.spatial_period;
    if (p == 0 || tile.temporal_period == 0 || tile.rows.size() != tile.temporal_period ||
        tile.shift_per_period >= p) {
        return false;
    }
    for (const auto& r : tile.rows) {
        if (r.width() != p) {
            return false;
        }
    }
    const std::size_t pop = tile.rows[0].popcount();
    if (pop == 0 || pop == p) {
        return false;
    }
    const std::size_t width = 3 * p;
    Configuration current = tile.tiled(width, 0);
    const Configuration start = current;
    for (std::size_t t = 1; t <= tile.temporal_period; ++t) {
        current = step(current, rule);
        const Configuration expected =
            t < tile.temporal_period ? tile.tiled(width, t) : start.rotated(static_cast<std::ptrdiff_t>(tile.shift_per_period));
        if (!(current == expected)) {
            return false;
        }
    }
    return true;
}

double ether_coverage(const Configuration& row, const EtherTile& tile) {
    const std::size_t p = tile.spatial_period;
    if (p == 0 || p > kMaxEtherSpatialPeriod || tile.rows.empty()) {
        throw UsageError("invalid ether tile");
    }
    std::vector<bool> known(std::size_t{1} << p, false);
    for (const auto& r : tile.rows) {
        const Bits v = to_bits(r);
        for (std::size_t k = 0; k < p; ++k) {
            known[rotate_bits(v, k, p)] = true;
        }
    }
    const std::size_t w = row.width();
    const std::size_t back = p / 2;
    // Window for x covers cells x - back .. x - back + p - 1; bit j <- cell.
    auto cell = [&](std::size_t x_plus_w, std::size_t offset) {
        return static_cast<Bits>(row.get((x_plus_w + offset) % w));
    };
    const std::size_t base = w * ((back / w) + 1) - back; // (0 - back) mod w, kept non-negative
    Bits window = 0;
    for (std::size_t j = 0; j < p; ++j) {
        window |= cell(base, j) << j;
    }
    std::size_t hits = 0;
    for (std::size_t x = 0; x < w; ++x) {
        if (known[window]) {
            ++hits;
        }
        window = (window >> 1) | (cell(base + x + 1, p - 1) << (p - 1));
    }
    return static_cast<double>(hits) / static_cast<double>(w);
}

} // namespace lzca
