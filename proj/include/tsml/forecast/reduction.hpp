#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "tsml/forecast/forecaster.hpp"
#include "tsml/tabular/base.hpp"

namespace tsml::forecast {

/**
 * @brief Forecasting by reduction to tabular regression over sliding windows.
 *
 * method "recursive" fits one regressor on one-step-ahead windows and rolls
 * its own predictions forward, so any horizon works. method "direct" fits one
 * regressor per requested step and therefore needs the horizon at fit time.
 * The wrapped regressor is a prototype: fitting trains fresh clones, and its
 * hyper-parameters are reachable as "regressor__<param>". step_length is
 * reserved and must stay 1.
 */
class ReducedRegressionForecaster : public Forecaster {
  public:
    ReducedRegressionForecaster(std::unique_ptr<tabular::Regressor> regressor,
                                std::int64_t window_length, std::string method = "recursive");

    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;
    std::vector<std::pair<std::string, const Estimator*>> components() const override;
    std::vector<std::pair<std::string, Estimator*>> components() override;

    void do_fit(const TimeSeries& y, const ForecastingHorizon* fh) override;
    std::vector<double> do_predict(const std::vector<std::int64_t>& steps) const override;
    double in_sample_value(std::size_t position) const override;

  private:
    std::unique_ptr<tabular::Regressor> prototype_;
    std::int64_t window_length_;
    std::string method_;

    std::unique_ptr<tabular::Regressor> recursive_model_;
    std::map<std::int64_t, std::unique_ptr<tabular::Regressor>> direct_models_;
};

}  // namespace tsml::forecast
