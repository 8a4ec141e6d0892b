#pragma once

#include <memory>
#include <vector>

#include "tsml/tabular/base.hpp"

namespace tsml::tabular {

/**
 * @brief Least-squares linear regression via normal equations, with a small
 *        ridge fallback on rank-deficient designs.
 */
class OlsRegressor : public Regressor {
  public:
    std::unique_ptr<Estimator> clone_unfitted() const override;

    /// Intercept first, then one slope per feature.
    const std::vector<double>& coefficients() const;

  protected:
    void do_fit(const Matrix& x, const std::vector<double>& y) override;
    double do_predict_row(std::span<const double> x) const override;

  private:
    std::vector<double> coef_;
};

}  // namespace tsml::tabular
