#include "tsml/tabular/knn.hpp"

#include <algorithm>

#include "tsml/errors.hpp"

namespace tsml::tabular {

namespace {

void check_k(std::int64_t k, std::size_t n_rows) {
    if (k < 1 || static_cast<std::size_t>(k) > n_rows) {
        throw InvalidK("k must lie in [1, " + std::to_string(n_rows) + "], got " +
                       std::to_string(k));
    }
}

}  // namespace

std::vector<std::size_t> nearest_rows(const Matrix& x, std::span<const double> query,
                                      std::size_t k) {
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        double d2 = 0.0;
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const double diff = x.at(i, j) - query[j];
            d2 += diff * diff;
        }
        scored.emplace_back(d2, i);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(scored[i].second);
    }
    return out;
}

std::unique_ptr<Estimator> KnnRegressor::clone_unfitted() const {
    return std::make_unique<KnnRegressor>(k_);
}

void KnnRegressor::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "k") {
        k_ = as_int(value, name);
        return;
    }
    Estimator::apply_param(name, value);
}

void KnnRegressor::do_fit(const Matrix& x, const std::vector<double>& y) {
    check_k(k_, x.rows());
    train_ = x;
    targets_ = y;
}

double KnnRegressor::do_predict_row(std::span<const double> x) const {
    double sum = 0.0;
    const std::vector<std::size_t> nearest =
        nearest_rows(*train_, x, static_cast<std::size_t>(k_));
    for (std::size_t i : nearest) {
        sum += targets_[i];
    }
    return sum / static_cast<double>(nearest.size());
}

std::unique_ptr<Estimator> KnnClassifier::clone_unfitted() const {
    return std::make_unique<KnnClassifier>(k_);
}

void KnnClassifier::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "k") {
        k_ = as_int(value, name);
        return;
    }
    Estimator::apply_param(name, value);
}

void KnnClassifier::do_fit(const Matrix& x, const std::vector<std::string>& y) {
    check_k(k_, x.rows());
    train_ = x;
    labels_ = y;
}

std::string KnnClassifier::do_predict_row(std::span<const double> x) const {
    std::vector<std::string> votes;
    for (std::size_t i : nearest_rows(*train_, x, static_cast<std::size_t>(k_))) {
        votes.push_back(labels_[i]);
    }
    return majority_label(votes);
}

}  // namespace tsml::tabular
