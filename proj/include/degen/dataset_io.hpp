#pragma once

#include "degen/stats.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace degen::io {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& message);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// "x,y" header, one pair per line, 12 significant digits.
[[nodiscard]] std::string to_csv(const DatasetPair& data);

/// Accepts an optional "x,y" header, blank lines and '#' comments.
/// @throws ParseError naming the 1-based line of the first bad row
[[nodiscard]] DatasetPair parse_csv(std::string_view text, const std::string& source = "<input>");

[[nodiscard]] DatasetPair read_csv(const std::filesystem::path& path);

/// Writes text to path, creating parent directories.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace degen::io
