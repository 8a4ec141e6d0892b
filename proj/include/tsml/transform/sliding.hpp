#pragma once

#include <cstdint>
#include <vector>

#include "tsml/matrix.hpp"
#include "tsml/time_series.hpp"

namespace tsml::transform {

struct TabularizedSet {
    Matrix x;
    std::vector<double> targets;
    std::vector<TimePoint> row_times;
};

/// Rolling-window regression rows over an equally spaced series: row i holds
/// values[i .. i+w-1] with target values[i+w-1+offset]; offset 1 is the
/// one-step-ahead layout with T - w rows.
TabularizedSet tabularize_sliding(const TimeSeries& y, std::int64_t window_length,
                                  std::int64_t offset = 1);

}  // namespace tsml::transform
