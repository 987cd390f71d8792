#pragma once

#include <cstdint>
#include <random>

namespace degen {

/// Seeded Normal(0, 1) stream: Box-Muller over mt19937_64 with an explicit
/// 53-bit uniform mapping, so a seed reproduces the same variates on every
/// standard library.
class NormalSource {
public:
    explicit NormalSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on the open interval (0, 1).
    double uniform();

    double standard_normal();

    double normal(double mean, double sd) { return mean + sd * standard_normal(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace degen
