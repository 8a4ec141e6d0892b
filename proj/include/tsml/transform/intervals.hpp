#pragma once

#include <cstdint>
#include <vector>

#include "tsml/time_series.hpp"

namespace tsml::transform {

inline constexpr std::int64_t kMinIntervalLength = 3;

/// Half-open position range [start, end) within a series.
struct Interval {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const { return end - start; }
    bool operator==(const Interval& other) const = default;
};

/// Sub-series per interval; each keeps the original time points.
std::vector<TimeSeries> segment_intervals(const TimeSeries& y,
                                          const std::vector<Interval>& intervals);

/// n random intervals with length uniform in [min_length, t] and start
/// uniform over valid starts; a pure function of its arguments.
std::vector<Interval> draw_random_intervals(std::size_t t, std::size_t n,
                                            std::size_t min_length, std::uint64_t seed);

}  // namespace tsml::transform
