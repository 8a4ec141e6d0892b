#include "tsml/transform/sliding.hpp"

#include <string>

#include "tsml/errors.hpp"

namespace tsml::transform {

TabularizedSet tabularize_sliding(const TimeSeries& y, std::int64_t window_length,
                                  std::int64_t offset) {
    if (window_length < 1) {
        throw InvalidParameter("window_length must be >= 1");
    }
    if (offset < 1) {
        throw InvalidParameter("target offset must be >= 1");
    }
    if (!y.index().spacing().has_value()) {
        throw UnequalSpacing("sliding windows need an equally spaced series");
    }
    const std::size_t w = static_cast<std::size_t>(window_length);
    const std::size_t reach = w + static_cast<std::size_t>(offset) - 1;
    if (y.size() <= reach) {
        throw WindowTooLong("series of length " + std::to_string(y.size()) +
                            " is too short for window " + std::to_string(window_length) +
                            " with target offset " + std::to_string(offset));
    }
    const std::size_t n_rows = y.size() - reach;
    Matrix x(n_rows, w);
    std::vector<double> targets(n_rows);
    std::vector<TimePoint> row_times(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            x.at(i, j) = y[i + j];
        }
        targets[i] = y[i + reach];
        row_times[i] = y.time_at(i + reach);
    }
    return {std::move(x), std::move(targets), std::move(row_times)};
}

}  // namespace tsml::transform
