#pragma once

#include <cstdint>
#include <vector>

#include "tsml/time_series.hpp"

namespace tsml {

/**
 * @brief Forecast target times, either as positive step offsets from the
 *        training cutoff or as absolute time points.
 *
 * Steps are interpreted in units of the training index resolution. Horizons
 * at or before the cutoff are rejected; in-sample prediction goes through
 * Forecaster::predict_in_sample instead.
 */
class ForecastingHorizon {
  public:
    static ForecastingHorizon relative(std::vector<std::int64_t> steps);
    static ForecastingHorizon absolute(std::vector<TimePoint> points);

    bool is_relative() const { return relative_; }
    std::size_t size() const;

    const std::vector<std::int64_t>& steps() const;
    const std::vector<TimePoint>& points() const;

    /// Relative steps mapped through cutoff + step * resolution; absolute
    /// points checked to lie strictly after the cutoff.
    std::vector<TimePoint> to_absolute(TimePoint cutoff, TimePoint resolution) const;

    /// Inverse of to_absolute; absolute points must land on the resolution
    /// grid (MisalignedHorizon otherwise).
    std::vector<std::int64_t> to_relative(TimePoint cutoff, TimePoint resolution) const;

  private:
    ForecastingHorizon() = default;

    bool relative_ = true;
    std::vector<std::int64_t> steps_;
    std::vector<TimePoint> points_;
};

}  // namespace tsml
