#include "tsml/tabular/base.hpp"

#include <cmath>
#include <map>

#include "tsml/errors.hpp"

namespace tsml::tabular {

namespace {

void check_targets(std::size_t n_rows, std::size_t n_targets) {
    if (n_rows != n_targets) {
        throw LengthMismatch("target count must equal the number of rows");
    }
}

void check_query(std::size_t expected, std::size_t got) {
    if (expected != got) {
        throw LengthMismatch("query has " + std::to_string(got) + " features, expected " +
                             std::to_string(expected));
    }
}

}  // namespace

void Regressor::fit(const Matrix& x, const std::vector<double>& y) {
    check_targets(x.rows(), y.size());
    for (double v : y) {
        if (!std::isfinite(v)) {
            throw NonFiniteValue("targets must be finite");
        }
    }
    clear_fitted();
    do_fit(x, y);
    n_features_ = x.cols();
    mark_fitted();
}

double Regressor::predict_row(std::span<const double> x) const {
    require_fitted();
    check_query(n_features_, x.size());
    return do_predict_row(x);
}

std::vector<double> Regressor::predict(const Matrix& x) const {
    std::vector<double> out;
    out.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        out.push_back(predict_row(x.row(i)));
    }
    return out;
}

std::size_t Regressor::n_features() const {
    require_fitted();
    return n_features_;
}

void Classifier::fit(const Matrix& x, const std::vector<std::string>& y) {
    check_targets(x.rows(), y.size());
    clear_fitted();
    do_fit(x, y);
    n_features_ = x.cols();
    mark_fitted();
}

std::string Classifier::predict_row(std::span<const double> x) const {
    require_fitted();
    check_query(n_features_, x.size());
    return do_predict_row(x);
}

std::vector<std::string> Classifier::predict(const Matrix& x) const {
    std::vector<std::string> out;
    out.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        out.push_back(predict_row(x.row(i)));
    }
    return out;
}

std::size_t Classifier::n_features() const {
    require_fitted();
    return n_features_;
}

std::string majority_label(const std::vector<std::string>& votes) {
    if (votes.empty()) {
        throw EmptyInput("majority vote needs at least one vote");
    }
    std::map<std::string, std::size_t> counts;
    for (const std::string& v : votes) {
        ++counts[v];
    }
    const std::string* best = nullptr;
    std::size_t best_count = 0;
    for (const auto& [label, count] : counts) {
        if (count > best_count) {
            best = &label;
            best_count = count;
        }
    }
    return *best;
}

}  // namespace tsml::tabular
