#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "lzca/analysis.hpp"
#include "lzca/error.hpp"
#include "lzca/evolution.hpp"
#include "lzca/lz78.hpp"
#include "oracles.hpp"

using namespace lzca;

namespace {

ComplexitySeries series_of(std::vector<double> values, std::uint64_t start = 0, std::uint64_t stride = 1) {
    ComplexitySeries s;
    s.values = std::move(values);
    s.start_step = start;
    s.stride = stride;
    return s;
}

std::vector<double> staircase(std::initializer_list<std::pair<double, int>> levels) {
    std::vector<double> v;
    for (const auto& [value, n] : levels) {
        v.insert(v.end(), static_cast<std::size_t>(n), value);
    }
    return v;
}

} // namespace

TEST_CASE("complexity of constant and empty regions") {
    const auto rec = evolve(Configuration(10), make_rule_table(110), 20);
    const auto whole = complexity_series(rec);
    REQUIRE(whole.size() == 21);
    for (const double v : whole.values) {
        CHECK(v == 4.0);
    }
    CHECK_FALSE(whole.region.has_value());

    const auto empty = complexity_series(rec, Region{3, 0});
    for (const double v : empty.values) {
        CHECK(v == 0.0);
    }
    CHECK_THROWS_AS(complexity_series(rec, Region{5, 6}), RangeError);
    CHECK_THROWS_AS(complexity_series(rec, Region{11, 0}), RangeError);
}

TEST_CASE("series values equal the oracle for each row, any thread count") {
    const auto rule = make_rule_table(110);
    const auto rec = evolve(random_configuration(500, 0.5, 4), rule, 300, 3);
    const Region region{37, 401};
    const auto one = complexity_series(rec, region, 1);
    const auto many = complexity_series(rec, region, 4);
    CHECK(one.values == many.values);
    CHECK(one.stride == 3);
    for (std::size_t i = 0; i < rec.rows.size(); i += 17) {
        CHECK(one.values[i] == oracle::lz78_count(rec.rows[i].to_string(37, 401)));
    }
}

TEST_CASE("section boundaries") {
    const auto s = section_boundaries(65900, 20);
    REQUIRE(s.size() == 20);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i] == Region{3295 * i, 3295});
    }
    CHECK(section_boundaries(10, 1) == std::vector<Region>{{0, 10}});
    CHECK(section_boundaries(10, 3) == std::vector<Region>{{0, 4}, {4, 3}, {7, 3}});
    CHECK_THROWS_AS(section_boundaries(10, 11), UsageError);
    CHECK_THROWS_AS(section_boundaries(10, 0), UsageError);
}

TEST_CASE("sections tile the row for arbitrary sizes") {
    for (std::size_t w = 1; w < 80; ++w) {
        for (std::size_t n = 1; n <= w; ++n) {
            const auto s = section_boundaries(w, n);
            std::size_t x = 0;
            for (const auto& r : s) {
                CHECK(r.start_x == x);
                CHECK((r.length == w / n || r.length == w / n + 1));
                x += r.length;
            }
            CHECK(x == w);
        }
    }
}

TEST_CASE("per-section counts stay within whole-row count plus the section count") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t w = 1 + gen() % 64;
        const std::string row = oracle::random_bits(gen, w, trial % 2 ? 0.5 : 0.2);
        const std::size_t n = 1 + gen() % w;
        const std::size_t whole = oracle::lz78_count(row);
        for (const auto& r : section_boundaries(w, n)) {
            const std::size_t part = lz78_phrase_count(Configuration::from_string(row), r.start_x, r.length);
            CHECK(part == oracle::lz78_count(row.substr(r.start_x, r.length)));
            CHECK(part <= whole + n);
        }
    }
}

TEST_CASE("moving average") {
    const auto ma = moving_average(series_of({1, 2, 3, 4}, 10, 2), 2);
    CHECK(ma.values == std::vector<double>{1.5, 2.5, 3.5});
    CHECK(ma.start_step == 12);
    CHECK(ma.stride == 2);

    const auto s = series_of({3, 1, 4, 1, 5, 9, 2, 6});
    CHECK(moving_average(s, 1).values == s.values);
    CHECK(moving_average(s, 8).values == std::vector<double>{31.0 / 8});
    for (const double v : moving_average(series_of(std::vector<double>(50, 7.0)), 13).values) {
        CHECK(v == 7.0);
    }
    CHECK_THROWS_AS(moving_average(s, 9), UsageError);
    CHECK_THROWS_AS(moving_average(s, 0), UsageError);
}

TEST_CASE("moving average is linear") {
    std::mt19937_64 gen(2);
    std::uniform_int_distribution<int> val(0, 7000);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a(300), b(300), mix(300);
        const double ka = static_cast<double>(gen() % 7) - 3, kb = static_cast<double>(gen() % 5) + 0.25;
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = val(gen);
            b[i] = val(gen);
            mix[i] = ka * a[i] + kb * b[i];
        }
        const std::size_t period = 1 + gen() % 120;
        const auto ma = moving_average(series_of(a), period);
        const auto mb = moving_average(series_of(b), period);
        const auto mm = moving_average(series_of(mix), period);
        for (std::size_t i = 0; i < mm.size(); ++i) {
            CHECK(mm.values[i] == doctest::Approx(ka * ma.values[i] + kb * mb.values[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("drop detection") {
    CHECK(detect_drops(series_of(std::vector<double>(40, 5.0)), 1, 0.1).empty());
    CHECK(detect_drops(series_of(std::vector<double>(40, 5.0)), 10, 0.1).empty());

    const auto step = detect_drops(series_of(staircase({{100, 10}, {50, 10}})), 1, 0.3);
    REQUIRE(step.size() == 1);
    CHECK(step[0] == DropEvent{9, 10, 50.0});

    const auto stairs = detect_drops(series_of(staircase({{100, 10}, {80, 10}, {60, 10}})), 1, 0.15);
    REQUIRE(stairs.size() == 2);
    CHECK(stairs[0] == DropEvent{9, 10, 20.0});
    CHECK(stairs[1] == DropEvent{19, 20, 20.0});

    // 20-point drop is exactly half of the 40-point range: one threshold above it, nothing found
    CHECK(detect_drops(series_of(staircase({{100, 10}, {80, 10}, {60, 10}})), 1, 0.51).empty());
}

TEST_CASE("drop detection works on the smoothed series") {
    const auto events = detect_drops(series_of(staircase({{100, 30}, {50, 30}}), 1000, 10), 5, 0.5);
    REQUIRE(events.size() == 1);
    // a trailing window of 5 turns the cliff at index 30 into a ramp ending at index 34
    CHECK(events[0].begin_step == 1000 + 29 * 10);
    CHECK(events[0].end_step == 1000 + 34 * 10);
    CHECK(events[0].magnitude == doctest::Approx(50.0));
    CHECK(detect_drops(series_of({1, 2, 3}), 5, 0.5).empty());
    CHECK_THROWS_AS(detect_drops(series_of({1, 2}), 1, 0.0), UsageError);
    CHECK_THROWS_AS(detect_drops(series_of({1, 2}), 1, 1.0), UsageError);
}

TEST_CASE("random-start complexity declines") {
    const auto rule = make_rule_table(110);
    const auto start = random_configuration(20000, 0.5, 8);
    const double c0 = static_cast<double>(lz78_phrase_count(start));
    const double c1 = static_cast<double>(lz78_phrase_count(advance(start, rule, 1500)));
    CHECK(c1 < 0.8 * c0);
}
