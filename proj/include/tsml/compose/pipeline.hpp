#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tsml/classify/base.hpp"
#include "tsml/tabular/base.hpp"
#include "tsml/transform/panel_transform.hpp"

namespace tsml::compose {

/**
 * @brief Adapts a tabular classifier to the panel interface. The panel must
 *        be fully numeric (every column a primitive); rows become feature
 *        vectors in column order. Parameters pass straight through to the
 *        wrapped learner, so a pipeline path like "knn__k" lands on it.
 */
class TabularPanelClassifier : public classify::TimeSeriesClassifier {
  public:
    explicit TabularPanelClassifier(std::unique_ptr<tabular::Classifier> classifier);

    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const Panel& panel, const std::vector<std::string>& labels) override;
    std::vector<std::string> do_predict(const Panel& panel) const override;

  private:
    std::unique_ptr<tabular::Classifier> prototype_;
    std::unique_ptr<tabular::Classifier> model_;
};

/**
 * @brief Named transformer steps chained in front of a final classifier;
 *        itself a classifier, with nested parameters under "<step>__".
 *
 * Each transformer step must receive at least one series column, so a chain
 * that tabularizes too early fails fast at fit with IncompatibleStep.
 */
class Pipeline : public classify::TimeSeriesClassifier {
  public:
    Pipeline(std::vector<std::pair<std::string, std::unique_ptr<transform::PanelTransformer>>>
                 steps,
             std::string final_name, std::unique_ptr<classify::TimeSeriesClassifier> final);

    std::unique_ptr<Estimator> clone_unfitted() const override;

    std::size_t n_steps() const { return steps_.size(); }

  protected:
    std::vector<std::pair<std::string, const Estimator*>> components() const override;
    std::vector<std::pair<std::string, Estimator*>> components() override;

    void do_fit(const Panel& panel, const std::vector<std::string>& labels) override;
    std::vector<std::string> do_predict(const Panel& panel) const override;

  private:
    std::vector<std::pair<std::string, std::unique_ptr<transform::PanelTransformer>>> steps_;
    std::string final_name_;
    std::unique_ptr<classify::TimeSeriesClassifier> final_;
};

}  // namespace tsml::compose
