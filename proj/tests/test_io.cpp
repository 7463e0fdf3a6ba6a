#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lzca/error.hpp"
#include "lzca/io.hpp"

using namespace lzca;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name, const std::string& content) {
    const auto dir = fs::temp_directory_path() / "lzca_test_io";
    fs::create_directories(dir);
    const auto p = dir / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

ComplexitySeries series(std::vector<double> v, std::uint64_t start, std::uint64_t stride) {
    ComplexitySeries s;
    s.values = std::move(v);
    s.start_step = start;
    s.stride = stride;
    return s;
}

} // namespace

TEST_CASE(".cfg parsing ignores whitespace") {
    const auto c = parse_configuration("0 1 0\n1");
    CHECK(c.width() == 4);
    CHECK(c.to_string() == "0101");
    CHECK(load_configuration(temp_file("a.cfg", "0 1 0\n1")).to_string() == "0101");
    CHECK(parse_configuration("\t1\r\n0\n\n").to_string() == "10");
}

TEST_CASE(".cfg errors") {
    CHECK_THROWS_WITH_AS(parse_configuration(""), doctest::Contains("zero digits"), ParseError);
    CHECK_THROWS_WITH_AS(load_configuration(temp_file("empty.cfg", "")), doctest::Contains("zero digits"), ParseError);
    CHECK_THROWS_AS(parse_configuration(" \n "), ParseError);
    try {
        parse_configuration("01 0x1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(load_configuration("/nonexistent/lzca.cfg"), IoError);
}

TEST_CASE(".cfg round trip at full reference width") {
    Configuration c(65900);
    for (std::size_t x = 0; x < c.width(); x += 7) {
        c.set(x, true);
    }
    const auto path = temp_file("big.cfg", "");
    save_configuration(path, c, 80);
    const auto back = load_configuration(path);
    CHECK(back.width() == 65900);
    CHECK(back == c);
}

TEST_CASE("number formatting is shortest round-trip") {
    CHECK(format_number(6068.0) == "6068");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(0.1) == "0.1");
}

TEST_CASE("series CSV schema") {
    std::ostringstream out;
    write_series_csv(out, {series({4, 5, 6}, 99, 1), series({1.5, 2, 2.5}, 99, 1)}, {"section_0", "section_1"},
                     {{"rule", "110"}, {"seed", "7"}});
    CHECK(out.str() == "# rule: 110\n# seed: 7\nstep,section_0,section_1\n99,4,1.5\n100,5,2\n101,6,2.5\n");

    const auto table = parse_series_csv(out.str());
    CHECK(table.names == std::vector<std::string>{"section_0", "section_1"});
    CHECK(table.steps == std::vector<double>{99, 100, 101});
    CHECK(table.columns[1] == std::vector<double>{1.5, 2, 2.5});
    CHECK(table.metadata.size() == 2);
    CHECK(table.metadata[0] == std::pair<std::string, std::string>{"rule", "110"});

    CHECK_THROWS_AS(write_series_csv(out, {series({1}, 0, 1), series({1, 2}, 0, 1)}, {"a", "b"}, {}), UsageError);
    CHECK_THROWS_AS(write_series_csv(out, {series({1}, 0, 1)}, {"a", "b"}, {}), UsageError);
}

TEST_CASE("series CSV validation") {
    CHECK_THROWS_AS(parse_series_csv("# only comments\n"), ParseError);
    CHECK_THROWS_AS(parse_series_csv("time,value\n0,1\n"), ParseError);
    CHECK_THROWS_AS(parse_series_csv("step,value\n0,1,2\n"), ParseError);
    CHECK_THROWS_AS(parse_series_csv("step,value\n0,abc\n"), ParseError);
    CHECK_THROWS_AS(parse_series_csv("step,value\n1,1\n1,2\n"), ParseError);
}
