#include "tsml/transform/intervals.hpp"

#include <string>

#include "tsml/errors.hpp"
#include "tsml/rng.hpp"

namespace tsml::transform {

std::vector<TimeSeries> segment_intervals(const TimeSeries& y,
                                          const std::vector<Interval>& intervals) {
    std::vector<TimeSeries> out;
    out.reserve(intervals.size());
    for (const Interval& interval : intervals) {
        if (interval.start >= interval.end || interval.end > y.size()) {
            throw IntervalOutOfBounds("interval [" + std::to_string(interval.start) + ", " +
                                      std::to_string(interval.end) +
                                      ") does not fit a series of length " +
                                      std::to_string(y.size()));
        }
        std::vector<TimePoint> times;
        std::vector<double> values;
        times.reserve(interval.length());
        values.reserve(interval.length());
        for (std::size_t i = interval.start; i < interval.end; ++i) {
            times.push_back(y.time_at(i));
            values.push_back(y[i]);
        }
        out.emplace_back(TimeIndex(std::move(times)), std::move(values));
    }
    return out;
}

std::vector<Interval> draw_random_intervals(std::size_t t, std::size_t n,
                                            std::size_t min_length, std::uint64_t seed) {
    if (min_length < 1 || t < min_length) {
        throw SeriesTooShort("series of length " + std::to_string(t) +
                             " cannot host intervals of length " + std::to_string(min_length));
    }
    if (n < 1) {
        throw InvalidParameter("interval count must be >= 1");
    }
    Rng rng(seed);
    std::vector<Interval> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t length =
            min_length + static_cast<std::size_t>(rng.bounded(t - min_length + 1));
        const std::size_t start = static_cast<std::size_t>(rng.bounded(t - length + 1));
        out.push_back({start, start + length});
    }
    return out;
}

}  // namespace tsml::transform
