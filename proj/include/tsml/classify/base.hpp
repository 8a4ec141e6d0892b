#pragma once

#include <string>
#include <vector>

#include "tsml/estimator.hpp"
#include "tsml/panel.hpp"

namespace tsml::classify {

/**
 * @brief Supervised learner over panel instances with string labels.
 */
class TimeSeriesClassifier : public Estimator {
  public:
    void fit(const Panel& panel, const std::vector<std::string>& labels);
    std::vector<std::string> predict(const Panel& panel) const;

  protected:
    virtual void do_fit(const Panel& panel, const std::vector<std::string>& labels) = 0;
    virtual std::vector<std::string> do_predict(const Panel& panel) const = 0;
};

/// The lone series column of a single-column panel; throws InvalidParameter
/// on extra columns and NotASeriesColumn on a primitive one.
const std::vector<Cell>& single_series_column(const Panel& panel);

/// Equal length shared by every series in the column, else LengthMismatch.
std::size_t common_series_length(const std::vector<Cell>& column);

}  // namespace tsml::classify
