#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lzca/analysis.hpp"
#include "lzca/cts.hpp"
#include "lzca/error.hpp"
#include "lzca/ether.hpp"
#include "lzca/evolution.hpp"
#include "lzca/experiment.hpp"
#include "lzca/io.hpp"
#include "lzca/lz78.hpp"
#include "lzca/plot.hpp"

namespace py = pybind11;
using namespace lzca;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Elementary cellular automata and LZ78 complexity analysis";
    m.attr("__version__") = kVersion;

    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<RuleTable>(m, "RuleTable")
        .def_property_readonly("rule_number", &RuleTable::rule_number)
        .def_property_readonly("entries", &RuleTable::entries)
        .def("encode", &RuleTable::encode)
        .def("next_state", &RuleTable::next_state, py::arg("left"), py::arg("center"), py::arg("right"))
        .def("__repr__", [](const RuleTable& r) { return "<RuleTable " + std::to_string(r.rule_number()) + ">"; });
    m.def("make_rule_table", &make_rule_table, py::arg("rule_number"));

    py::class_<Configuration>(m, "Configuration")
        .def(py::init<std::size_t>(), py::arg("width"))
        .def_static("from_string", &Configuration::from_string, py::arg("bits"))
        .def_property_readonly("width", &Configuration::width)
        .def("__len__", &Configuration::width)
        .def("__getitem__",
             [](const Configuration& c, std::size_t x) {
                 if (x >= c.width()) {
                     throw py::index_error();
                 }
                 return static_cast<int>(c.get(x));
             })
        .def("popcount", &Configuration::popcount)
        .def("rotated", &Configuration::rotated, py::arg("k"))
        .def("to_string", py::overload_cast<>(&Configuration::to_string, py::const_))
        .def("__str__", py::overload_cast<>(&Configuration::to_string, py::const_))
        .def(py::self == py::self);
    m.def("random_configuration", &random_configuration, py::arg("width"), py::arg("density") = 0.5,
          py::arg("seed") = 0);
    m.def("parse_configuration", &parse_configuration, py::arg("text"));
    m.def("load_configuration", &load_configuration, py::arg("path"));

    m.def("step", &step, py::arg("config"), py::arg("rule"));
    py::class_<SpacetimeRecording>(m, "SpacetimeRecording")
        .def_readonly("width", &SpacetimeRecording::width)
        .def_readonly("start_step", &SpacetimeRecording::start_step)
        .def_readonly("stride", &SpacetimeRecording::stride)
        .def_readonly("rows", &SpacetimeRecording::rows)
        .def("__len__", [](const SpacetimeRecording& r) { return r.rows.size(); });
    m.def("evolve", &evolve, py::arg("config"), py::arg("rule"), py::arg("steps"), py::arg("record_every") = 1);

    m.def("lz78_parse", [](std::string_view s) { return lz78_parse(s).phrases; }, py::arg("bits"),
          "LZ78 phrases of a '0'/'1' string");
    m.def("lz78_phrase_count", py::overload_cast<std::string_view>(&lz78_phrase_count), py::arg("bits"));
    m.def("lz78_phrase_count_config",
          py::overload_cast<const Configuration&, std::size_t, std::size_t>(&lz78_phrase_count), py::arg("row"),
          py::arg("start"), py::arg("length"));

    py::class_<CtsTrace>(m, "CtsTrace")
        .def_readonly("words", &CtsTrace::words)
        .def_readonly("lengths", &CtsTrace::lengths)
        .def_readonly("words_truncated", &CtsTrace::words_truncated)
        .def_readonly("halted", &CtsTrace::halted)
        .def_readonly("final_step", &CtsTrace::final_step);
    m.def(
        "cts_run",
        [](const std::string& word, std::vector<std::string> appendants, std::uint64_t max_steps) {
            return cts_run(CtsState{word, 0, 0}, CtsSystem(std::move(appendants)), max_steps);
        },
        py::arg("word"), py::arg("appendants"), py::arg("max_steps") = kDefaultCtsMaxSteps);

    py::class_<Region>(m, "Region")
        .def(py::init<std::size_t, std::size_t>(), py::arg("start_x"), py::arg("length"))
        .def_readwrite("start_x", &Region::start_x)
        .def_readwrite("length", &Region::length)
        .def(py::self == py::self)
        .def("__repr__", [](const Region& r) {
            return "Region(" + std::to_string(r.start_x) + ", " + std::to_string(r.length) + ")";
        });
    py::class_<ComplexitySeries>(m, "ComplexitySeries")
        .def(py::init([](std::vector<double> values, std::uint64_t start_step, std::uint64_t stride) {
                 ComplexitySeries s;
                 s.values = std::move(values);
                 s.start_step = start_step;
                 s.stride = stride;
                 return s;
             }),
             py::arg("values"), py::arg("start_step") = 0, py::arg("stride") = 1)
        .def_readonly("start_step", &ComplexitySeries::start_step)
        .def_readonly("stride", &ComplexitySeries::stride)
        .def_readonly("values", &ComplexitySeries::values)
        .def_readonly("region", &ComplexitySeries::region)
        .def("__len__", &ComplexitySeries::size);
    m.def("complexity_series", &complexity_series, py::arg("recording"), py::arg("region") = std::nullopt,
          py::arg("threads") = 0);
    m.def("section_boundaries", &section_boundaries, py::arg("width"), py::arg("n_sections"));
    m.def("moving_average", &moving_average, py::arg("series"), py::arg("period"));
    py::class_<DropEvent>(m, "DropEvent")
        .def_readonly("begin_step", &DropEvent::begin_step)
        .def_readonly("end_step", &DropEvent::end_step)
        .def_readonly("magnitude", &DropEvent::magnitude);
    m.def("detect_drops", &detect_drops, py::arg("series"), py::arg("window") = 100, py::arg("min_drop") = 0.1);

    py::class_<EtherTile>(m, "EtherTile")
        .def_readonly("rule_number", &EtherTile::rule_number)
        .def_readonly("spatial_period", &EtherTile::spatial_period)
        .def_readonly("temporal_period", &EtherTile::temporal_period)
        .def_readonly("shift_per_period", &EtherTile::shift_per_period)
        .def_readonly("rows", &EtherTile::rows)
        .def("tiled", &EtherTile::tiled, py::arg("width"), py::arg("phase") = 0);
    m.def("find_ether_tile", &find_ether_tile, py::arg("rule"), py::arg("spatial_period"),
          py::arg("temporal_period"));
    m.def("ether_coverage", &ether_coverage, py::arg("row"), py::arg("tile"));
}
