#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tsml {

/// Time points are signed integers at a fixed, caller-declared resolution.
/// Calendar parsing is the CLI's job, not the container's.
using TimePoint = std::int64_t;

/// Strictly increasing, non-empty sequence of time points.
class TimeIndex {
public:
    explicit TimeIndex(std::vector<TimePoint> points);

    /// [start, start + n*step) with n points.
    static TimeIndex range(TimePoint start, std::size_t n, TimePoint step = 1);

    std::size_t size() const noexcept { return points_.size(); }
    TimePoint operator[](std::size_t i) const { return points_[i]; }
    TimePoint front() const { return points_.front(); }
    TimePoint back() const { return points_.back(); }
    const std::vector<TimePoint>& points() const noexcept { return points_; }

    /// Spacing between consecutive points when identical everywhere
    /// (or the index is a single point); nullopt otherwise.
    std::optional<TimePoint> spacing() const;

    /// Position of a time point, or nullopt when absent.
    std::optional<std::size_t> position_of(TimePoint t) const;

    bool operator==(const TimeIndex&) const = default;

private:
    std::vector<TimePoint> points_;
};

/// A univariate series: a time index with one finite value per point.
/// Immutable after construction; non-finite observations are rejected.
class TimeSeries {
public:
    TimeSeries(TimeIndex index, std::vector<double> values);

    /// Values indexed 0..n-1.
    static TimeSeries from_values(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const TimeIndex& index() const noexcept { return index_; }
    const std::vector<double>& values() const noexcept { return values_; }
    TimePoint time_at(std::size_t i) const { return index_[i]; }

    bool operator==(const TimeSeries&) const = default;

private:
    TimeIndex index_;
    std::vector<double> values_;
};

}  // namespace tsml
