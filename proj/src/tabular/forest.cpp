#include "tsml/tabular/forest.hpp"

#include <cmath>

#include "tsml/errors.hpp"

namespace tsml::tabular {

namespace {

void validate(const ForestConfig& config) {
    if (config.n_trees < 1) {
        throw InvalidParameter("n_trees must be >= 1");
    }
}

ParamMap forest_params(const ForestConfig& config) {
    return {{"n_trees", config.n_trees},
            {"max_depth", config.max_depth},
            {"min_leaf", config.min_leaf},
            {"seed", static_cast<std::int64_t>(config.seed)},
            {"bootstrap", config.bootstrap}};
}

bool apply_forest_param(ForestConfig& config, const std::string& name, const ParamValue& value) {
    if (name == "n_trees") {
        config.n_trees = as_int(value, name);
    } else if (name == "max_depth") {
        config.max_depth = as_int(value, name);
    } else if (name == "min_leaf") {
        config.min_leaf = as_int(value, name);
    } else if (name == "seed") {
        config.seed = static_cast<std::uint64_t>(as_int(value, name));
    } else if (name == "bootstrap") {
        config.bootstrap = as_bool(value, name);
    } else {
        return false;
    }
    return true;
}

TreeConfig tree_config_for(const ForestConfig& config, std::size_t n_cols) {
    TreeConfig tc;
    tc.max_depth = config.max_depth;
    tc.min_leaf = config.min_leaf;
    tc.feature_subset =
        static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n_cols))));
    return tc;
}

Matrix sample_rows(const Matrix& x, const std::vector<std::size_t>& rows) {
    Matrix out(rows.size(), x.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            out.at(i, j) = x.at(rows[i], j);
        }
    }
    return out;
}

std::vector<std::size_t> bootstrap_rows(Rng& rng, std::size_t n) {
    std::vector<std::size_t> rows(n);
    for (std::size_t& r : rows) {
        r = rng.bounded(n);
    }
    return rows;
}

}  // namespace

std::unique_ptr<Estimator> ForestRegressor::clone_unfitted() const {
    return std::make_unique<ForestRegressor>(config_);
}

const std::vector<Tree>& ForestRegressor::trees() const {
    require_fitted();
    return trees_;
}

ParamMap ForestRegressor::own_params() const { return forest_params(config_); }

void ForestRegressor::apply_param(const std::string& name, const ParamValue& value) {
    if (!apply_forest_param(config_, name, value)) {
        Estimator::apply_param(name, value);
    }
}

void ForestRegressor::do_fit(const Matrix& x, const std::vector<double>& y) {
    validate(config_);
    const TreeConfig tc = tree_config_for(config_, x.cols());
    trees_.clear();
    for (std::int64_t t = 0; t < config_.n_trees; ++t) {
        Rng rng(derive_seed(config_.seed, static_cast<std::uint64_t>(t)));
        if (config_.bootstrap) {
            const std::vector<std::size_t> rows = bootstrap_rows(rng, x.rows());
            std::vector<double> targets(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                targets[i] = y[rows[i]];
            }
            trees_.push_back(grow_regression_tree(sample_rows(x, rows), targets, tc, rng));
        } else {
            trees_.push_back(grow_regression_tree(x, y, tc, rng));
        }
    }
}

double ForestRegressor::do_predict_row(std::span<const double> x) const {
    double sum = 0.0;
    for (const Tree& tree : trees_) {
        sum += tree_predict_value(tree, x);
    }
    return sum / static_cast<double>(trees_.size());
}

std::unique_ptr<Estimator> ForestClassifier::clone_unfitted() const {
    return std::make_unique<ForestClassifier>(config_);
}

const std::vector<Tree>& ForestClassifier::trees() const {
    require_fitted();
    return trees_;
}

ParamMap ForestClassifier::own_params() const { return forest_params(config_); }

void ForestClassifier::apply_param(const std::string& name, const ParamValue& value) {
    if (!apply_forest_param(config_, name, value)) {
        Estimator::apply_param(name, value);
    }
}

void ForestClassifier::do_fit(const Matrix& x, const std::vector<std::string>& y) {
    validate(config_);
    const TreeConfig tc = tree_config_for(config_, x.cols());
    trees_.clear();
    for (std::int64_t t = 0; t < config_.n_trees; ++t) {
        Rng rng(derive_seed(config_.seed, static_cast<std::uint64_t>(t)));
        if (config_.bootstrap) {
            const std::vector<std::size_t> rows = bootstrap_rows(rng, x.rows());
            std::vector<std::string> labels(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                labels[i] = y[rows[i]];
            }
            trees_.push_back(grow_classification_tree(sample_rows(x, rows), labels, tc, rng));
        } else {
            trees_.push_back(grow_classification_tree(x, y, tc, rng));
        }
    }
}

std::string ForestClassifier::do_predict_row(std::span<const double> x) const {
    std::vector<std::string> votes;
    votes.reserve(trees_.size());
    for (const Tree& tree : trees_) {
        votes.push_back(tree_predict_label(tree, x));
    }
    return majority_label(votes);
}

}  // namespace tsml::tabular
