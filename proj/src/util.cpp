#include "tsml/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "tsml/errors.hpp"

namespace tsml {

double mean_of(std::span<const double> values) {
    if (values.empty()) {
        throw EmptyInput("mean of an empty range");
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

double sample_std(std::span<const double> values) {
    if (values.size() < 2) {
        throw SeriesTooShort("standard deviation needs at least two observations");
    }
    const double m = mean_of(values);
    double ss = 0.0;
    for (double v : values) {
        ss += (v - m) * (v - m);
    }
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double slope_of(std::span<const double> values) {
    if (values.size() < 2) {
        throw SeriesTooShort("slope needs at least two observations");
    }
    const double n = static_cast<double>(values.size());
    const double x_mean = (n - 1.0) / 2.0;
    const double y_mean = mean_of(values);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double dx = static_cast<double>(i) - x_mean;
        sxy += dx * (values[i] - y_mean);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

double min_of(std::span<const double> values) {
    if (values.empty()) {
        throw EmptyInput("min of an empty range");
    }
    return *std::min_element(values.begin(), values.end());
}

double max_of(std::span<const double> values) {
    if (values.empty()) {
        throw EmptyInput("max of an empty range");
    }
    return *std::max_element(values.begin(), values.end());
}

double median_of(std::span<const double> values) {
    if (values.empty()) {
        throw EmptyInput("median of an empty range");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    if (sorted.size() % 2 == 1) {
        return sorted[mid];
    }
    return 0.5 * (sorted[mid - 1] + sorted[mid]);
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace tsml
