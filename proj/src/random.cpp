#include "degen/random.hpp"

#include <cmath>
#include <numbers>

namespace degen {

double NormalSource::uniform() {
    constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
    for (;;) {
        const double u = static_cast<double>(engine_() >> 11) * scale;
        if (u > 0.0) {
            return u;
        }
    }
}

double NormalSource::standard_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

}  // namespace degen
