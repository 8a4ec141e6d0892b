#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tsml/rng.hpp"
#include "tsml/tabular/base.hpp"

namespace tsml::tabular {

/// Arena node: feature < 0 marks a leaf; split sends x[feature] < threshold
/// to the left child.
struct TreeNode {
    std::int32_t feature = -1;
    double threshold = 0.0;
    std::size_t left = 0;
    std::size_t right = 0;
    double value = 0.0;
    std::string label;
};

struct Tree {
    std::vector<TreeNode> nodes;
};

struct TreeConfig {
    std::int64_t max_depth = -1;
    std::int64_t min_leaf = 1;
    std::int64_t feature_subset = 0;
    std::uint64_t seed = 0;
};

/// Greedy CART. Splits maximize SSE reduction (regression) or entropy gain
/// (classification) over midpoint thresholds; zero-gain splits are taken so
/// impurity that no single split can reduce (e.g. XOR layouts) still
/// separates at greater depth. Ties keep the lowest feature and smallest
/// threshold. feature_subset > 0 draws that many candidate features per node
/// without replacement from the rng.
Tree grow_regression_tree(const Matrix& x, const std::vector<double>& y, const TreeConfig& config);
Tree grow_regression_tree(const Matrix& x, const std::vector<double>& y, const TreeConfig& config,
                          Rng& rng);
Tree grow_classification_tree(const Matrix& x, const std::vector<std::string>& y,
                              const TreeConfig& config);
Tree grow_classification_tree(const Matrix& x, const std::vector<std::string>& y,
                              const TreeConfig& config, Rng& rng);

double tree_predict_value(const Tree& tree, std::span<const double> x);
const std::string& tree_predict_label(const Tree& tree, std::span<const double> x);

/**
 * @brief Single CART regression tree as an estimator.
 */
class CartRegressor : public Regressor {
  public:
    explicit CartRegressor(TreeConfig config = {}) : config_(config) {}

    std::unique_ptr<Estimator> clone_unfitted() const override;
    const Tree& tree() const;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const Matrix& x, const std::vector<double>& y) override;
    double do_predict_row(std::span<const double> x) const override;

  private:
    TreeConfig config_;
    Tree tree_;
};

/**
 * @brief Single CART classification tree as an estimator.
 */
class CartClassifier : public Classifier {
  public:
    explicit CartClassifier(TreeConfig config = {}) : config_(config) {}

    std::unique_ptr<Estimator> clone_unfitted() const override;
    const Tree& tree() const;

  protected:
    ParamMap own_params() const override;
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const Matrix& x, const std::vector<std::string>& y) override;
    std::string do_predict_row(std::span<const double> x) const override;

  private:
    TreeConfig config_;
    Tree tree_;
};

}  // namespace tsml::tabular
