#pragma once

#include "degen/verify.hpp"

#include <string>

namespace degen::io {

enum class ReportFormat { Text, Json };

/// Plain-text table: one row per constraint plus derived values and moments.
[[nodiscard]] std::string report_text(const VerificationReport& report);

/// Structured document with the same fields as report_text.
[[nodiscard]] std::string report_json(const VerificationReport& report);

[[nodiscard]] std::string format_report(const VerificationReport& report, ReportFormat format);

}  // namespace degen::io
