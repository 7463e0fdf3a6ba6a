#include "lzca/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lzca/error.hpp"

namespace lzca {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Configuration parse_configuration(std::string_view text) {
    std::size_t digits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '0' || c == '1') {
            ++digits;
        } else if (c != ' ' && c != '\n' && c != '\r' && c != '\t' && c != '\v' && c != '\f') {
            throw ParseError("illegal character at byte offset " + std::to_string(i), i);
        }
    }
    if (digits == 0) {
        throw ParseError("configuration has zero digits");
    }
    Configuration config(digits);
    std::size_t x = 0;
    for (const char c : text) {
        if (c == '1') {
            config.set(x++, true);
        } else if (c == '0') {
            ++x;
        }
    }
    return config;
}

Configuration load_configuration(const std::filesystem::path& path) {
    try {
        return parse_configuration(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.offset());
    }
}

void write_configuration(std::ostream& out, const Configuration& config, std::size_t line_width) {
    if (line_width == 0) {
        line_width = config.width();
    }
    for (std::size_t x = 0; x < config.width(); x += line_width) {
        out << config.to_string(x, std::min(line_width, config.width() - x)) << '\n';
    }
}

void save_configuration(const std::filesystem::path& path, const Configuration& config, std::size_t line_width) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    write_configuration(out, config, line_width);
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

void write_series_csv(std::ostream& out, const std::vector<ComplexitySeries>& columns,
                      const std::vector<std::string>& names, const Metadata& metadata) {
    if (columns.empty() || columns.size() != names.size()) {
        throw UsageError("CSV needs one name per column and at least one column");
    }
    const auto& first = columns.front();
    for (const auto& c : columns) {
        if (c.start_step != first.start_step || c.stride != first.stride || c.size() != first.size()) {
            throw UsageError("CSV columns must share start step, stride and length");
        }
    }
    for (const auto& [key, value] : metadata) {
        out << "# " << key << ": " << value << '\n';
    }
    out << "step";
    for (const auto& n : names) {
        out << ',' << n;
    }
    out << '\n';
    for (std::size_t i = 0; i < first.size(); ++i) {
        out << first.step_at(i);
        for (const auto& c : columns) {
            out << ',' << format_number(c.values[i]);
        }
        out << '\n';
    }
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        cells.push_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return cells;
}

double parse_double(std::string_view cell, std::size_t line_no) {
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric cell '" + std::string(cell) + "'");
    }
    return v;
}

} // namespace

SeriesTable parse_series_csv(std::string_view text) {
    SeriesTable table;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            line.remove_prefix(1);
            if (!line.empty() && line.front() == ' ') {
                line.remove_prefix(1);
            }
            const auto colon = line.find(": ");
            if (colon == std::string_view::npos) {
                table.metadata.emplace_back(std::string(line), "");
            } else {
                table.metadata.emplace_back(std::string(line.substr(0, colon)), std::string(line.substr(colon + 2)));
            }
            continue;
        }
        const auto cells = split_commas(line);
        if (!have_header) {
            if (cells.size() < 2 || cells.front() != "step") {
                throw ParseError("CSV header must be 'step,<column>...'");
            }
            for (std::size_t i = 1; i < cells.size(); ++i) {
                table.names.emplace_back(cells[i]);
            }
            table.columns.resize(table.names.size());
            have_header = true;
            continue;
        }
        if (cells.size() != table.names.size() + 1) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(table.names.size() + 1) + " cells");
        }
        const double step = parse_double(cells[0], line_no);
        if (!table.steps.empty() && step <= table.steps.back()) {
            throw ParseError("line " + std::to_string(line_no) + ": steps must increase");
        }
        table.steps.push_back(step);
        for (std::size_t i = 1; i < cells.size(); ++i) {
            table.columns[i - 1].push_back(parse_double(cells[i], line_no));
        }
    }
    if (!have_header) {
        throw ParseError("CSV has no header line");
    }
    return table;
}

SeriesTable load_series_csv(const std::filesystem::path& path) { return parse_series_csv(read_text_file(path)); }

} // namespace lzca
