#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tsml/classify/base.hpp"
#include "tsml/distance/elastic.hpp"
#include "tsml/time_series.hpp"

namespace tsml::classify {

/**
 * @brief k-nearest-neighbour classifier under an elastic distance.
 *
 * Training and query series must share one length. Neighbour ties break to
 * the lower training index, vote ties to the lexicographically smallest
 * label. The distance is configurable by name ("euclidean", "dtw", "ddtw",
 * "wdtw") together with a band fraction (negative disables the band) and the
 * WDTW steepness g.
 */
class TimeSeriesKnnClassifier : public TimeSeriesClassifier {
  public:
    explicit TimeSeriesKnnClassifier(std::int64_t k = 1,
                                     distance::DistanceSpec spec = distance::DistanceSpec::dtw());

    std::unique_ptr<Estimator> clone_unfitted() const override;

    std::string classify(const TimeSeries& query) const;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const Panel& panel, const std::vector<std::string>& labels) override;
    std::vector<std::string> do_predict(const Panel& panel) const override;

  private:
    std::int64_t k_;
    distance::DistanceSpec spec_;

    std::vector<std::vector<double>> train_;
    std::vector<std::string> labels_;
    std::size_t series_length_ = 0;
};

}  // namespace tsml::classify
