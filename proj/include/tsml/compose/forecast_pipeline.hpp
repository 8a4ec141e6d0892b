#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tsml/forecast/forecaster.hpp"
#include "tsml/transform/detrend.hpp"

namespace tsml::compose {

/**
 * @brief Target-transforming chain: each detrender step strips its trend from
 *        the series before the final forecaster fits the residuals.
 *        Predictions add the trends back in reverse step order, so the chain
 *        forecasts on the original scale.
 */
class ForecastingPipeline : public forecast::Forecaster {
  public:
    ForecastingPipeline(std::vector<std::pair<std::string, transform::Detrender>> steps,
                        std::string final_name,
                        std::unique_ptr<forecast::Forecaster> final);

    std::unique_ptr<Estimator> clone_unfitted() const override;

    std::size_t n_steps() const { return steps_.size(); }

  protected:
    std::vector<std::pair<std::string, const Estimator*>> components() const override;
    std::vector<std::pair<std::string, Estimator*>> components() override;

    void do_fit(const TimeSeries& y, const ForecastingHorizon* fh) override;
    std::vector<double> do_predict(const std::vector<std::int64_t>& steps) const override;
    double in_sample_value(std::size_t position) const override;

  private:
    std::vector<std::pair<std::string, transform::Detrender>> steps_;
    std::string final_name_;
    std::unique_ptr<forecast::Forecaster> final_;
};

}  // namespace tsml::compose
