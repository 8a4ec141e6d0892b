#pragma once

#include <span>
#include <string>
#include <vector>

#include "tsml/estimator.hpp"
#include "tsml/matrix.hpp"

namespace tsml::tabular {

/**
 * @brief Supervised learner on fixed-width numeric rows with real targets.
 */
class Regressor : public Estimator {
  public:
    void fit(const Matrix& x, const std::vector<double>& y);
    double predict_row(std::span<const double> x) const;
    std::vector<double> predict(const Matrix& x) const;

    std::size_t n_features() const;

  protected:
    virtual void do_fit(const Matrix& x, const std::vector<double>& y) = 0;
    virtual double do_predict_row(std::span<const double> x) const = 0;

  private:
    std::size_t n_features_ = 0;
};

/**
 * @brief Supervised learner on fixed-width numeric rows with string labels.
 */
class Classifier : public Estimator {
  public:
    void fit(const Matrix& x, const std::vector<std::string>& y);
    std::string predict_row(std::span<const double> x) const;
    std::vector<std::string> predict(const Matrix& x) const;

    std::size_t n_features() const;

  protected:
    virtual void do_fit(const Matrix& x, const std::vector<std::string>& y) = 0;
    virtual std::string do_predict_row(std::span<const double> x) const = 0;

  private:
    std::size_t n_features_ = 0;
};

/// Majority label; count ties go to the lexicographically smallest label.
std::string majority_label(const std::vector<std::string>& votes);

}  // namespace tsml::tabular
