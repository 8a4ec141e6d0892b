#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tsml/classify/base.hpp"

namespace tsml::compose {

/**
 * @brief One classifier per series column; predictions are a per-instance
 *        majority vote across columns, ties to the lexicographically
 *        smallest label. Every series column must have an assignment.
 */
class ColumnEnsembleClassifier : public classify::TimeSeriesClassifier {
  public:
    explicit ColumnEnsembleClassifier(
        std::vector<std::pair<std::string, std::unique_ptr<classify::TimeSeriesClassifier>>>
            assignments);

    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    std::vector<std::pair<std::string, const Estimator*>> components() const override;
    std::vector<std::pair<std::string, Estimator*>> components() override;

    void do_fit(const Panel& panel, const std::vector<std::string>& labels) override;
    std::vector<std::string> do_predict(const Panel& panel) const override;

  private:
    Panel column_panel(const Panel& panel, const std::string& column) const;

    std::vector<std::pair<std::string, std::unique_ptr<classify::TimeSeriesClassifier>>>
        assignments_;
    std::vector<std::unique_ptr<classify::TimeSeriesClassifier>> models_;
};

/// Per instance, the listed series columns joined end to end into one series
/// re-indexed from 0; the output column name joins the inputs with "_".
Panel column_concatenate(const Panel& panel, const std::vector<std::string>& columns);

}  // namespace tsml::compose
