#pragma once

#include "degen/stats.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace degen::anscombe {

inline constexpr std::size_t kCount = 4;
inline constexpr std::array<std::string_view, kCount> kNames = {"I", "II", "III", "IV"};

/// Anscombe's datasets in their original (unsorted) row order.
/// @throws std::out_of_range for index >= 4
[[nodiscard]] DatasetPair dataset(std::size_t index);

/// The same data as CSV, with the published one/two-decimal formatting.
[[nodiscard]] std::string csv(std::size_t index);

}  // namespace degen::anscombe
