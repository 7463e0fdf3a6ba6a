#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "lzca/analysis.hpp"
#include "lzca/error.hpp"
#include "lzca/ether.hpp"
#include "lzca/evolution.hpp"
#include "lzca/lz78.hpp"
#include "oracles.hpp"

using namespace lzca;

namespace {

// Brute-force tile check on strings: tiled three times and evolved
// `temporal` steps, does the row come back as a rotation?
std::optional<std::size_t> oracle_shift(const std::string& seed, int rule, std::size_t temporal) {
    const std::string start = seed + seed + seed;
    std::string row = start;
    for (std::size_t t = 0; t < temporal; ++t) {
        row = oracle::step(row, rule);
    }
    for (std::size_t k = 0; k < seed.size(); ++k) {
        if (oracle::rotate(start, k) == row) {
            return k;
        }
    }
    return std::nullopt;
}

bool uniform(const std::string& s) { return s.find_first_not_of(s[0]) == std::string::npos; }

} // namespace

TEST_CASE("rule 110 has a (14, 7) ether tile") {
    // oracle: exhaustive search over all 2^14 seed rows
    std::size_t oracle_hits = 0;
    for (std::uint64_t v = 0; v < (1u << 14); ++v) {
        const auto s = oracle::bits_of(v, 14);
        if (!uniform(s) && oracle_shift(s, 110, 7)) {
            ++oracle_hits;
        }
    }
    CHECK(oracle_hits > 0);

    const auto tile = find_ether_tile(make_rule_table(110), 14, 7);
    REQUIRE(tile.has_value());
    CHECK(tile->spatial_period == 14);
    CHECK(tile->temporal_period == 7);
    REQUIRE(tile->rows.size() == 7);
    const std::string row0 = tile->rows[0].to_string();
    CHECK_FALSE(uniform(row0));
    const auto shift = oracle_shift(row0, 110, 7);
    REQUIRE(shift.has_value());
    CHECK(*shift == tile->shift_per_period);
    CHECK(verify_ether_tile(*tile, make_rule_table(110)));

    // every intermediate row matches the oracle's evolution
    std::string row = row0 + row0 + row0;
    for (std::size_t t = 0; t < 7; ++t) {
        CHECK(row.substr(0, 14) == tile->rows[t].to_string());
        row = oracle::step(row, 110);
    }
}

TEST_CASE("tile search reports no non-uniform tile where none exists") {
    CHECK_FALSE(find_ether_tile(make_rule_table(110), 1, 1).has_value());
    for (const std::size_t p : {1u, 2u, 5u, 14u}) {
        CHECK_FALSE(find_ether_tile(make_rule_table(0), p, 3).has_value());
    }
}

TEST_CASE("tile search agrees with brute force on small periods") {
    for (const int rule : {30, 54, 90, 110, 184, 204}) {
        for (std::size_t p = 1; p <= 8; ++p) {
            for (std::size_t t = 1; t <= 4; ++t) {
                bool oracle_found = false;
                for (std::uint64_t v = 0; v < (1u << p) && !oracle_found; ++v) {
                    const auto s = oracle::bits_of(v, p);
                    bool minimal = true;
                    for (std::size_t d = 1; d < p; ++d) {
                        if (p % d == 0 && oracle::rotate(s, d) == s) {
                            minimal = false;
                        }
                    }
                    oracle_found = !uniform(s) && minimal && oracle_shift(s, rule, t).has_value();
                }
                const auto tile = find_ether_tile(make_rule_table(rule), p, t);
                CHECK_MESSAGE(tile.has_value() == oracle_found, "rule " << rule << " p " << p << " t " << t);
            }
        }
    }
}

TEST_CASE("tile search bounds") {
    CHECK_THROWS_AS(find_ether_tile(make_rule_table(110), 21, 7), CapabilityError);
    CHECK_THROWS_AS(find_ether_tile(make_rule_table(110), 0, 7), UsageError);
    CHECK_THROWS_AS(find_ether_tile(make_rule_table(110), 14, 0), UsageError);
}

TEST_CASE("ether coverage") {
    const auto rule = make_rule_table(110);
    const auto tile = find_ether_tile(rule, 14, 7);
    REQUIRE(tile);
    CHECK(ether_coverage(tile->tiled(14 * 50), *tile) == 1.0);
    CHECK(ether_coverage(tile->tiled(14 * 50, 3), *tile) == 1.0);
    CHECK(ether_coverage(tile->tiled(14 * 50).rotated(5), *tile) == 1.0);
    CHECK(ether_coverage(Configuration(700), *tile) == 0.0);
    CHECK(ether_coverage(random_configuration(65900, 0.5, 1), *tile) < 0.05);

    // a defect destroys exactly the windows that contain it
    auto row = tile->tiled(14 * 50);
    row.set(300, !row.get(300));
    const double cov = ether_coverage(row, *tile);
    CHECK(cov < 1.0);
    CHECK(cov >= 1.0 - 14.0 / 700.0);
}

TEST_CASE("ether-only recordings have flat complexity and full coverage") {
    const auto rule = make_rule_table(110);
    const auto tile = find_ether_tile(rule, 14, 7);
    REQUIRE(tile);
    const auto rec = evolve(tile->tiled(14 * 300), rule, 100);
    const auto whole = complexity_series(rec);
    const auto part = complexity_series(rec, Region{333, 1100});
    for (const auto* s : {&whole, &part}) {
        const auto [lo, hi] = std::minmax_element(s->values.begin(), s->values.end());
        CHECK(*hi - *lo <= 2.0);
    }
    for (const auto& r : rec.rows) {
        CHECK(ether_coverage(r, *tile) == 1.0);
    }
}
