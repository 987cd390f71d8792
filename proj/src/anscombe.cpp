#include "degen/anscombe.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace degen::anscombe {

namespace {

struct Row {
    const char* x;
    const char* y;
};

constexpr std::size_t kRows = 11;

// clang-format off
constexpr std::array<std::array<Row, kRows>, kCount> kTable = {{
    {{{"10.0", "8.04"}, {"8.0", "6.95"}, {"13.0", "7.58"}, {"9.0", "8.81"}, {"11.0", "8.33"},
      {"14.0", "9.96"}, {"6.0", "7.24"}, {"4.0", "4.26"}, {"12.0", "10.84"}, {"7.0", "4.82"},
      {"5.0", "5.68"}}},
    {{{"10.0", "9.14"}, {"8.0", "8.14"}, {"13.0", "8.74"}, {"9.0", "8.77"}, {"11.0", "9.26"},
      {"14.0", "8.10"}, {"6.0", "6.13"}, {"4.0", "3.10"}, {"12.0", "9.13"}, {"7.0", "7.26"},
      {"5.0", "4.74"}}},
    {{{"10.0", "7.46"}, {"8.0", "6.77"}, {"13.0", "12.74"}, {"9.0", "7.11"}, {"11.0", "7.81"},
      {"14.0", "8.84"}, {"6.0", "6.08"}, {"4.0", "5.39"}, {"12.0", "8.15"}, {"7.0", "6.42"},
      {"5.0", "5.73"}}},
    {{{"8.0", "6.58"}, {"8.0", "5.76"}, {"8.0", "7.71"}, {"8.0", "8.84"}, {"8.0", "8.47"},
      {"8.0", "7.04"}, {"8.0", "5.25"}, {"19.0", "12.50"}, {"8.0", "5.56"}, {"8.0", "7.91"},
      {"8.0", "6.89"}}},
}};
// clang-format on

const std::array<Row, kRows>& rows(std::size_t index) {
    if (index >= kCount) {
        throw std::out_of_range("quartet has datasets 0..3");
    }
    return kTable[index];
}

}  // namespace

DatasetPair dataset(std::size_t index) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const Row& r : rows(index)) {
        xs.push_back(std::stod(r.x));
        ys.push_back(std::stod(r.y));
    }
    return DatasetPair(std::move(xs), std::move(ys));
}

std::string csv(std::size_t index) {
    std::string out = "x,y\n";
    for (const Row& r : rows(index)) {
        out += r.x;
        out += ',';
        out += r.y;
        out += '\n';
    }
    return out;
}

}  // namespace degen::anscombe
