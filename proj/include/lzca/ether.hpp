#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lzca/configuration.hpp"
#include "lzca/rule.hpp"

namespace lzca {

// Largest spatial period the exhaustive tile search accepts.
inline constexpr std::size_t kMaxEtherSpatialPeriod = 20;

// Spatially and temporally periodic background of a rule. rows[t] is the
// tile at time t (all of width spatial_period); after temporal_period steps
// rows[0] reappears rotated right by shift_per_period cells.
struct EtherTile {
    std::uint8_t rule_number = 0;
    std::size_t spatial_period = 0;
    std::size_t temporal_period = 0;
    std::size_t shift_per_period = 0;
    std::vector<Configuration> rows;

    // rows[phase % temporal_period] repeated to `width` cells.
    Configuration tiled(std::size_t width, std::size_t phase = 0) const;
};

// Exhaustive search over all 2^spatial_period seed rows, in increasing order
// of the seed read as a binary number with cell 0 as the least significant
// bit. A seed qualifies when it is not uniform, its minimal cyclic period is
// exactly spatial_period, and, tiled to 3 * spatial_period cells and
// evolved temporal_period steps, it equals a rotation of itself. The
// returned tile has passed verify_ether_tile(). Throws CapabilityError when
// spatial_period exceeds kMaxEtherSpatialPeriod and UsageError for zero
// periods.
std::optional<EtherTile> find_ether_tile(const RuleTable& rule, std::size_t spatial_period,
                                         std::size_t temporal_period);

// Re-evolves the tile with the general stepping kernel at width
// 3 * spatial_period and checks every row plus the closing rotation.
bool verify_ether_tile(const EtherTile& tile, const RuleTable& rule);

// Fraction of cells x whose centered window of spatial_period cells,
// starting at x - spatial_period / 2 (cyclic), equals some rotation of some
// tile row.
double ether_coverage(const Configuration& row, const EtherTile& tile);

} // namespace lzca
