#include "degen/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace degen::roots {

std::vector<Bracket> scan_sign_changes(const std::function<double(double)>& f, double lo,
                                       double hi, int samples) {
    if (samples < 2 || !(hi > lo)) {
        throw std::invalid_argument("scan needs samples >= 2 and hi > lo");
    }
    std::vector<Bracket> brackets;
    const double step = (hi - lo) / static_cast<double>(samples - 1);
    double prev_x = lo;
    double prev_f = f(lo);
    for (int i = 1; i < samples; ++i) {
        const double x = i == samples - 1 ? hi : lo + step * static_cast<double>(i);
        const double fx = f(x);
        if (std::isfinite(prev_f) && std::isfinite(fx)) {
            if (prev_f == 0.0) {
                brackets.push_back({prev_x, prev_x});
            } else if ((prev_f < 0.0) != (fx < 0.0) && fx != 0.0) {
                brackets.push_back({prev_x, x});
            }
        }
        prev_x = x;
        prev_f = fx;
    }
    if (prev_f == 0.0) {
        brackets.push_back({prev_x, prev_x});
    }
    return brackets;
}

RootResult bisect_secant(const std::function<double(double)>& f, Bracket bracket, double x_tol,
                         double f_tol) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    double flo = f(lo);
    double fhi = f(hi);
    RootResult result;

    if (flo == 0.0) {
        return {lo, flo, 0};
    }
    if (fhi == 0.0) {
        return {hi, fhi, 0};
    }
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw std::invalid_argument("bracket does not enclose a sign change");
    }

    constexpr int max_bisections = 200;
    while (hi - lo > x_tol * std::max(1.0, std::fabs(lo)) && result.iterations < max_bisections) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        ++result.iterations;
        if (fmid == 0.0) {
            return {mid, fmid, result.iterations};
        }
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }

    // Secant polish from the final bracket endpoints.
    double x0 = lo;
    double f0 = flo;
    double x1 = hi;
    double f1 = fhi;
    if (std::fabs(f0) < std::fabs(f1)) {
        std::swap(x0, x1);
        std::swap(f0, f1);
    }
    double best_x = x1;
    double best_f = f1;
    for (int i = 0; i < 20 && std::fabs(f1) >= f_tol && f1 != f0; ++i) {
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 >= bracket.lo && x2 <= bracket.hi)) {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1);
        ++result.iterations;
        if (std::fabs(f1) < std::fabs(best_f)) {
            best_x = x1;
            best_f = f1;
        }
    }
    result.x = best_x;
    result.fx = best_f;
    return result;
}

}  // namespace degen::roots
