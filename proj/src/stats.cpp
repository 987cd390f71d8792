#include "degen/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace degen {

namespace {

void require_finite(std::span<const double> values, const char* name) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(std::string(name) + " contains a non-finite value");
        }
    }
}

class CompensatedSum {
public:
    void add(double value) noexcept {
        const double t = sum_ + value;
        if (std::fabs(sum_) >= std::fabs(value)) {
            compensation_ += (sum_ - t) + value;
        } else {
            compensation_ += (value - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace

DatasetPair::DatasetPair(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size()) {
        throw std::invalid_argument("x and y lengths differ (" + std::to_string(xs_.size()) +
                                    " vs " + std::to_string(ys_.size()) + ")");
    }
    if (xs_.size() < 3) {
        throw std::invalid_argument("a dataset needs at least 3 points");
    }
    require_finite(xs_, "x");
    require_finite(ys_, "y");
}

void DatasetPair::set_y(std::size_t index, double value) {
    if (index >= ys_.size()) {
        throw std::out_of_range("index " + std::to_string(index) + " out of range");
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("y must be finite");
    }
    ys_[index] = value;
}

namespace stats {

double sum(std::span<const double> values) {
    CompensatedSum acc;
    for (double v : values) {
        acc.add(v);
    }
    return acc.value();
}

double mean(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("empty vector");
    }
    return sum(values) / static_cast<double>(values.size());
}

double sum_squared_deviations(std::span<const double> values) {
    const double m = mean(values);
    CompensatedSum acc;
    for (double v : values) {
        const double d = v - m;
        acc.add(d * d);
    }
    return acc.value();
}

double sum_cross_deviations(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("length mismatch in covariance");
    }
    const double mx = mean(x);
    const double my = mean(y);
    CompensatedSum acc;
    for (std::size_t k = 0; k < x.size(); ++k) {
        acc.add((x[k] - mx) * (y[k] - my));
    }
    return acc.value();
}

double variance(std::span<const double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("degenerate sample");
    }
    return sum_squared_deviations(values) / static_cast<double>(values.size() - 1);
}

double covariance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("length mismatch in covariance");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("degenerate sample");
    }
    return sum_cross_deviations(x, y) / static_cast<double>(x.size() - 1);
}

RegressionFit linregress(const DatasetPair& data) {
    const double sxx = sum_squared_deviations(data.xs());
    if (sxx == 0.0) {
        throw std::invalid_argument("vertical data, slope undefined");
    }
    const double sxy = sum_cross_deviations(data.xs(), data.ys());
    const double syy = sum_squared_deviations(data.ys());

    RegressionFit fit;
    fit.beta1 = sxy / sxx;
    fit.beta0 = mean(data.ys()) - fit.beta1 * mean(data.xs());
    fit.r_squared = syy == 0.0 ? 1.0 : fit.beta1 * fit.beta1 * sxx / syy;
    return fit;
}

double zscore_moment(std::span<const double> values, int order) {
    if (order != 3 && order != 4) {
        throw std::invalid_argument("z-score moment order must be 3 or 4");
    }
    const double var = variance(values);
    if (var == 0.0) {
        throw std::invalid_argument("zero variance, z-scores undefined");
    }
    const double m = mean(values);
    const double sd = std::sqrt(var);
    CompensatedSum acc;
    for (double v : values) {
        const double z = (v - m) / sd;
        const double z2 = z * z;
        acc.add(order == 3 ? z2 * z : z2 * z2);
    }
    return acc.value() / static_cast<double>(values.size());
}

}  // namespace stats
}  // namespace degen
