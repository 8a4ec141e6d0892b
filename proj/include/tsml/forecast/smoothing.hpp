#pragma once

#include <memory>
#include <string>

#include "tsml/forecast/forecaster.hpp"

namespace tsml::forecast {

/**
 * @brief Simple (level-only) and Holt (level + trend) exponential smoothing.
 *
 * Recursion: l_t = alpha*y_t + (1-alpha)*(l_{t-1} [+ b_{t-1}]),
 * b_t = beta*(l_t - l_{t-1}) + (1-beta)*b_{t-1}, initialized l_0 = y_0 and
 * b_0 = y_1 - y_0. Setting alpha or beta to 0 requests automatic selection
 * over the grid {0.05, 0.10, ..., 0.95} by in-sample one-step SSE, ties to
 * the smaller value (alpha before beta).
 */
class ExpSmoothingForecaster : public Forecaster {
  public:
    explicit ExpSmoothingForecaster(bool trend = false, double alpha = 0.0, double beta = 0.0);

    std::unique_ptr<Estimator> clone_unfitted() const override;

    double alpha() const;
    double beta() const;
    double level() const;
    double trend_term() const;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const TimeSeries& y, const ForecastingHorizon* fh) override;
    std::vector<double> do_predict(const std::vector<std::int64_t>& steps) const override;
    double in_sample_value(std::size_t position) const override;

  private:
    bool trend_;
    double alpha_param_;
    double beta_param_;

    double alpha_fit_ = 0.0;
    double beta_fit_ = 0.0;
    double level_ = 0.0;
    double trend_fit_ = 0.0;
    std::vector<double> fitted_;
};

}  // namespace tsml::forecast
