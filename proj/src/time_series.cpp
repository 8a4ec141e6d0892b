#include "tsml/time_series.hpp"

#include <algorithm>
#include <cmath>

#include "tsml/errors.hpp"

namespace tsml {

TimeIndex::TimeIndex(std::vector<TimePoint> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw InvalidTimeIndex("time index must not be empty");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i] <= points_[i - 1]) {
            throw InvalidTimeIndex("time index must be strictly increasing");
        }
    }
}

TimeIndex TimeIndex::range(TimePoint start, std::size_t n, TimePoint step) {
    if (n == 0) {
        throw InvalidTimeIndex("time index must not be empty");
    }
    if (step <= 0) {
        throw InvalidTimeIndex("time index step must be positive");
    }
    std::vector<TimePoint> points(n);
    for (std::size_t i = 0; i < n; ++i) {
        points[i] = start + static_cast<TimePoint>(i) * step;
    }
    return TimeIndex(std::move(points));
}

std::optional<TimePoint> TimeIndex::spacing() const {
    if (points_.size() < 2) {
        return 1;
    }
    const TimePoint d = points_[1] - points_[0];
    for (std::size_t i = 2; i < points_.size(); ++i) {
        if (points_[i] - points_[i - 1] != d) {
            return std::nullopt;
        }
    }
    return d;
}

std::optional<std::size_t> TimeIndex::position_of(TimePoint t) const {
    const auto it = std::lower_bound(points_.begin(), points_.end(), t);
    if (it == points_.end() || *it != t) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - points_.begin());
}

TimeSeries::TimeSeries(TimeIndex index, std::vector<double> values)
    : index_(std::move(index)), values_(std::move(values)) {
    if (index_.size() != values_.size()) {
        throw LengthMismatch("time index and values must have equal length");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw NonFiniteValue("series values must be finite");
        }
    }
}

TimeSeries TimeSeries::from_values(std::vector<double> values) {
    if (values.empty()) {
        throw EmptyInput("series must contain at least one observation");
    }
    TimeIndex index = TimeIndex::range(0, values.size());
    return TimeSeries(std::move(index), std::move(values));
}

}  // namespace tsml
