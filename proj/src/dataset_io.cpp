#include "degen/dataset_io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace degen::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view field, double& value) {
    field = trim(field);
    if (field.empty()) {
        return false;
    }
    const char* begin = field.data();
    const char* end = begin + field.size();
    if (*begin == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc() && ptr == end;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

std::string to_csv(const DatasetPair& data) {
    std::string out = "x,y\n";
    char buffer[64];
    for (std::size_t k = 0; k < data.size(); ++k) {
        std::snprintf(buffer, sizeof buffer, "%.12g,%.12g\n", data.xs()[k], data.ys()[k]);
        out += buffer;
    }
    return out;
}

DatasetPair parse_csv(std::string_view text, const std::string& source) {
    std::vector<double> xs;
    std::vector<double> ys;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (!text.empty()) {
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto comma = line.find(',');
        if (!seen_content) {
            seen_content = true;
            if (comma != std::string_view::npos && trim(line.substr(0, comma)) == "x" &&
                trim(line.substr(comma + 1)) == "y") {
                continue;
            }
        }
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(source, line_no, "expected two comma-separated values");
        }
        double x = 0.0;
        double y = 0.0;
        if (!parse_number(line.substr(0, comma), x) || !parse_number(line.substr(comma + 1), y)) {
            throw ParseError(source, line_no, "malformed number in '" + std::string(line) + "'");
        }
        xs.push_back(x);
        ys.push_back(y);
    }
    try {
        return DatasetPair(std::move(xs), std::move(ys));
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, line_no, e.what());
    }
}

DatasetPair read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str(), path.string());
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace degen::io
