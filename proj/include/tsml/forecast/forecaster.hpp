#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tsml/estimator.hpp"
#include "tsml/horizon.hpp"
#include "tsml/time_series.hpp"

namespace tsml::forecast {

/**
 * @brief Single-series forecaster contract.
 *
 * fit records the training index (which must be equally spaced) and its
 * resolution; predict maps the horizon to relative steps against the cutoff
 * and returns a series over the absolute horizon points. predict_in_sample
 * serves fitted values at training time points only.
 */
class Forecaster : public Estimator {
  public:
    void fit(const TimeSeries& y);
    /// Variant for strategies that must know the horizon at fit time.
    void fit(const TimeSeries& y, const ForecastingHorizon& fh);

    TimeSeries predict(const ForecastingHorizon& fh) const;
    TimeSeries predict_in_sample(const std::vector<TimePoint>& points) const;

    const TimeIndex& training_index() const;
    TimePoint cutoff() const;
    TimePoint resolution() const;

  protected:
    virtual void do_fit(const TimeSeries& y, const ForecastingHorizon* fh) = 0;
    /// steps are validated relative offsets >= 1, strictly increasing.
    virtual std::vector<double> do_predict(const std::vector<std::int64_t>& steps) const = 0;
    /// position indexes the training series.
    virtual double in_sample_value(std::size_t position) const = 0;

    const std::vector<double>& training_values() const;

  private:
    void fit_impl(const TimeSeries& y, const ForecastingHorizon* fh);

    std::optional<TimeSeries> train_;
    TimePoint resolution_ = 1;
};

}  // namespace tsml::forecast
