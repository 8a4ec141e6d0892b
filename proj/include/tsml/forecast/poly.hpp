#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tsml/forecast/forecaster.hpp"

namespace tsml::forecast {

/**
 * @brief Least-squares polynomial trend in the position 0..T-1, extrapolated
 *        to horizon positions T-1+step.
 */
class PolyTrendForecaster : public Forecaster {
  public:
    explicit PolyTrendForecaster(std::int64_t degree = 1);

    std::unique_ptr<Estimator> clone_unfitted() const override;

    /// Constant term first.
    const std::vector<double>& coefficients() const;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const TimeSeries& y, const ForecastingHorizon* fh) override;
    std::vector<double> do_predict(const std::vector<std::int64_t>& steps) const override;
    double in_sample_value(std::size_t position) const override;

  private:
    double eval(double position) const;

    std::int64_t degree_;
    std::vector<double> coef_;
};

}  // namespace tsml::forecast
