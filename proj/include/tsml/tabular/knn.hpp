#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tsml/tabular/base.hpp"

namespace tsml::tabular {

/// Indices of the k rows nearest to the query under squared Euclidean
/// distance; distance ties go to the lower row index.
std::vector<std::size_t> nearest_rows(const Matrix& x, std::span<const double> query,
                                      std::size_t k);

/**
 * @brief k-nearest-neighbors regression: mean target of the k nearest rows.
 */
class KnnRegressor : public Regressor {
  public:
    explicit KnnRegressor(std::int64_t k = 1) : k_(k) {}

    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    ParamMap own_params() const override { return {{"k", k_}}; }
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const Matrix& x, const std::vector<double>& y) override;
    double do_predict_row(std::span<const double> x) const override;

  private:
    std::int64_t k_;
    std::optional<Matrix> train_;
    std::vector<double> targets_;
};

/**
 * @brief k-nearest-neighbors classification: majority label of the k nearest
 *        rows, count ties to the lexicographically smallest label.
 */
class KnnClassifier : public Classifier {
  public:
    explicit KnnClassifier(std::int64_t k = 1) : k_(k) {}

    std::unique_ptr<Estimator> clone_unfitted() const override;

  protected:
    ParamMap own_params() const override { return {{"k", k_}}; }
    void apply_param(const std::string& name, const ParamValue& value) override;

    void do_fit(const Matrix& x, const std::vector<std::string>& y) override;
    std::string do_predict_row(std::span<const double> x) const override;

  private:
    std::int64_t k_;
    std::optional<Matrix> train_;
    std::vector<std::string> labels_;
};

}  // namespace tsml::tabular
