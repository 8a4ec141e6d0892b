#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tsml/classify/base.hpp"
#include "tsml/tabular/tree.hpp"
#include "tsml/time_series.hpp"
#include "tsml/transform/intervals.hpp"

namespace tsml::classify {

/**
 * @brief Interval-based forest: each tree sees mean, standard deviation, and
 *        slope over its own random intervals.
 *
 * Per tree, ceil(sqrt(T)) intervals of length >= 3 are drawn from a seed
 * derived for that tree; the tree is an entropy CART grown on all 3 features
 * per interval with no bootstrap and no feature subsetting, so the interval
 * draw is the only source of diversity. Prediction is a majority vote with
 * ties to the lexicographically smallest label.
 */
class TimeSeriesForestClassifier : public TimeSeriesClassifier {
  public:
    explicit TimeSeriesForestClassifier(std::int64_t n_trees = 100, std::uint64_t seed = 0);

    std::unique_ptr<Estimator> clone_unfitted() const override;

    std::string classify(const TimeSeries& query) const;

    std::size_t n_trees_fitted() const { return trees_.size(); }
    const std::vector<transform::Interval>& intervals_of(std::size_t tree) const;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const Panel& panel, const std::vector<std::string>& labels) override;
    std::vector<std::string> do_predict(const Panel& panel) const override;

  private:
    std::vector<double> interval_features(const std::vector<double>& values,
                                          const std::vector<transform::Interval>& intervals) const;

    std::int64_t n_trees_;
    std::uint64_t seed_;

    std::vector<std::vector<transform::Interval>> intervals_;
    std::vector<tabular::Tree> trees_;
    std::size_t series_length_ = 0;
};

}  // namespace tsml::classify
