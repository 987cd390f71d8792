#include "degen/report_io.hpp"

#include <json.hpp>

#include <cstdio>

namespace degen::io {

namespace {

std::string line(const char* fmt, auto... args) {
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, fmt, args...);
    return buffer;
}

}  // namespace

std::string report_text(const VerificationReport& report) {
    std::string out;
    out += line("%-10s %18s %18s %12s  %s\n", "constraint", "target", "measured", "residual",
                "status");
    for (const auto& c : report.checks) {
        out += line("%-10s %18.12g %18.12g %12.3e  %s\n",
                    std::string(constraint_name(c.constraint)).c_str(), c.target, c.measured,
                    c.residual, c.passed ? "pass" : "FAIL");
    }
    out += line("%-10s %18s %18.12g\n", "beta0", "", report.beta0);
    out += line("%-10s %18s %18.12g\n", "r_squared", "", report.r_squared);
    if (report.moments) {
        const MomentReport& m = *report.moments;
        out += line("moments    skew_x %.6f  kurt_x %.6f  skew_y %.6f  kurt_y %.6f\n", m.skew_x,
                    m.kurt_x, m.skew_y, m.kurt_y);
    }
    out += line("tolerance  %.3g\n", report.tolerance);
    out += line("overall    %s\n", report.passed ? "PASS" : "FAIL");
    return out;
}

std::string report_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["passed"] = report.passed;
    doc["tolerance"] = report.tolerance;
    auto& constraints = doc["constraints"];
    constraints = nlohmann::ordered_json::object();
    for (const auto& c : report.checks) {
        constraints[std::string(constraint_name(c.constraint))] = {
            {"target", c.target},
            {"measured", c.measured},
            {"residual", c.residual},
            {"passed", c.passed},
        };
    }
    doc["beta0"] = report.beta0;
    doc["r_squared"] = report.r_squared;
    if (report.moments) {
        doc["moments"] = {
            {"skew_x", report.moments->skew_x},
            {"kurt_x", report.moments->kurt_x},
            {"skew_y", report.moments->skew_y},
            {"kurt_y", report.moments->kurt_y},
        };
    } else {
        doc["moments"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

std::string format_report(const VerificationReport& report, ReportFormat format) {
    return format == ReportFormat::Json ? report_json(report) : report_text(report);
}

}  // namespace degen::io
