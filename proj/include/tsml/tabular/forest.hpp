#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tsml/tabular/tree.hpp"

namespace tsml::tabular {

struct ForestConfig {
    std::int64_t n_trees = 100;
    std::int64_t max_depth = -1;
    std::int64_t min_leaf = 1;
    std::uint64_t seed = 0;
    bool bootstrap = true;
};

/**
 * @brief Random forest regression: bootstrapped CART trees with
 *        ceil(sqrt(D)) candidate features per node, averaged predictions.
 *
 * Tree t draws from its own stream derived from (seed, t), so results do not
 * depend on training order.
 */
class ForestRegressor : public Regressor {
  public:
    explicit ForestRegressor(ForestConfig config = {}) : config_(config) {}

    std::unique_ptr<Estimator> clone_unfitted() const override;
    const std::vector<Tree>& trees() const;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const Matrix& x, const std::vector<double>& y) override;
    double do_predict_row(std::span<const double> x) const override;

  private:
    ForestConfig config_;
    std::vector<Tree> trees_;
};

/**
 * @brief Random forest classification; majority vote with lexicographic ties.
 */
class ForestClassifier : public Classifier {
  public:
    explicit ForestClassifier(ForestConfig config = {}) : config_(config) {}

    std::unique_ptr<Estimator> clone_unfitted() const override;
    const std::vector<Tree>& trees() const;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const Matrix& x, const std::vector<std::string>& y) override;
    std::string do_predict_row(std::span<const double> x) const override;

  private:
    ForestConfig config_;
    std::vector<Tree> trees_;
};

}  // namespace tsml::tabular
