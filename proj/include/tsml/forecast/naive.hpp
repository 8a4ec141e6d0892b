#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "tsml/forecast/forecaster.hpp"

namespace tsml::forecast {

/**
 * @brief Baseline forecasts: repeat the last value, the training mean, or the
 *        last seasonal cycle.
 *
 * Strategies: "last", "mean", "seasonal_last" (with period sp). In-sample
 * fitted values are the one-step-ahead analogues: previous value (first value
 * for itself), the training mean, and the value one period back (the value
 * itself within the first period).
 */
class NaiveForecaster : public Forecaster {
  public:
    explicit NaiveForecaster(std::string strategy = "last", std::int64_t sp = 1);

    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const TimeSeries& y, const ForecastingHorizon* fh) override;
    std::vector<double> do_predict(const std::vector<std::int64_t>& steps) const override;
    double in_sample_value(std::size_t position) const override;

  private:
    std::string strategy_;
    std::int64_t sp_;
    double mean_ = 0.0;
};

}  // namespace tsml::forecast
