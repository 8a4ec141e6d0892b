#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tsml/forecast/forecaster.hpp"
#include "tsml/time_series.hpp"

namespace tsml::transform {

/**
 * @brief Removes a fitted trend and can add it back.
 *
 * The trend is either a least-squares polynomial in the position (degree
 * mode) or any forecaster's fitted values (forecaster mode). transform
 * subtracts the trend evaluated at the given series' own time points;
 * polynomial trends extrapolate to arbitrary positions, forecaster trends
 * combine in-sample values with forward predictions for points after the
 * training cutoff.
 */
class Detrender : public Estimator {
  public:
    explicit Detrender(std::int64_t degree = 1);
    explicit Detrender(std::unique_ptr<forecast::Forecaster> forecaster);

    void fit(const TimeSeries& y);
    TimeSeries transform(const TimeSeries& y) const;
    TimeSeries inverse(const TimeSeries& r) const;

    /// The fitted trend evaluated at the given time points.
    std::vector<double> trend_at(const TimeIndex& index) const;

    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;
    std::vector<std::pair<std::string, const Estimator*>> components() const override;
    std::vector<std::pair<std::string, Estimator*>> components() override;

  private:
    bool poly_mode_;
    std::int64_t degree_ = 1;
    std::unique_ptr<forecast::Forecaster> prototype_;

    std::unique_ptr<forecast::Forecaster> model_;
    std::vector<double> coef_;
    TimePoint train_start_ = 0;
    TimePoint train_step_ = 1;
};

}  // namespace tsml::transform
