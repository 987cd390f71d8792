#pragma once

#include <functional>
#include <vector>

namespace degen::roots {

struct Bracket {
    double lo;
    double hi;
};

/**
 * Samples f at `samples` evenly spaced points on [lo, hi] and returns every
 * adjacent pair across which f changes sign. Non-finite samples break the
 * scan so poles are never reported as roots.
 */
[[nodiscard]] std::vector<Bracket> scan_sign_changes(const std::function<double(double)>& f,
                                                     double lo, double hi, int samples);

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
};

/**
 * Root of f inside a sign-change bracket. Bisects until the bracket is
 * narrower than x_tol, then takes secant steps (kept inside the bracket)
 * until |f| < f_tol or no further progress is possible.
 *
 * @throws std::invalid_argument if f(lo) and f(hi) have the same sign
 */
[[nodiscard]] RootResult bisect_secant(const std::function<double(double)>& f, Bracket bracket,
                                       double x_tol = 1e-12, double f_tol = 1e-10);

}  // namespace degen::roots
