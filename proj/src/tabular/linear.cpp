#include "tsml/tabular/linear.hpp"

#include "tsml/errors.hpp"
#include "tsml/linalg.hpp"

namespace tsml::tabular {

std::unique_ptr<Estimator> OlsRegressor::clone_unfitted() const {
    return std::make_unique<OlsRegressor>();
}

const std::vector<double>& OlsRegressor::coefficients() const {
    require_fitted();
    return coef_;
}

void OlsRegressor::do_fit(const Matrix& x, const std::vector<double>& y) {
    if (x.rows() < x.cols() + 1) {
        throw TooFewRows("least squares needs at least one more row than features");
    }
    std::vector<std::vector<double>> design(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        design[i].reserve(x.cols() + 1);
        design[i].push_back(1.0);
        for (std::size_t j = 0; j < x.cols(); ++j) {
            design[i].push_back(x.at(i, j));
        }
    }
    coef_ = linalg::least_squares(design, y);
}

double OlsRegressor::do_predict_row(std::span<const double> x) const {
    double out = coef_[0];
    for (std::size_t j = 0; j < x.size(); ++j) {
        out += coef_[j + 1] * x[j];
    }
    return out;
}

}  // namespace tsml::tabular
