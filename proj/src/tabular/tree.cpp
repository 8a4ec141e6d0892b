#include "tsml/tabular/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tsml/errors.hpp"

namespace tsml::tabular {

namespace {

void validate_config(const TreeConfig& config, std::size_t n_rows, std::size_t n_cols) {
    if (config.min_leaf < 1) {
        throw InvalidParameter("min_leaf must be >= 1");
    }
    if (config.max_depth < -1) {
        throw InvalidParameter("max_depth must be -1 (unlimited) or >= 0");
    }
    if (config.feature_subset < 0 || static_cast<std::size_t>(config.feature_subset) > n_cols) {
        throw InvalidParameter("feature_subset must lie in [0, n_features]");
    }
    if (n_rows < 2 * static_cast<std::size_t>(config.min_leaf)) {
        throw TooFewRows("tree fitting needs at least 2 * min_leaf rows");
    }
}

// Node impurity scaled by the row count: SSE for regression, n * entropy
// (bits) for classification. Gains compare parent minus children sums.
double sse_of(const std::vector<double>& y, const std::vector<std::size_t>& rows) {
    double sum = 0.0;
    for (std::size_t r : rows) {
        sum += y[r];
    }
    const double mean = sum / static_cast<double>(rows.size());
    double sse = 0.0;
    for (std::size_t r : rows) {
        sse += (y[r] - mean) * (y[r] - mean);
    }
    return sse;
}

double scaled_entropy(const std::vector<std::size_t>& counts, std::size_t total) {
    double h = 0.0;
    for (std::size_t c : counts) {
        if (c > 0) {
            const double p = static_cast<double>(c) / static_cast<double>(total);
            h -= p * std::log2(p);
        }
    }
    return h * static_cast<double>(total);
}

struct Split {
    std::size_t feature = 0;
    double threshold = 0.0;
    double gain = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};

class Grower {
  public:
    Grower(const Matrix& x, const std::vector<double>& y_real,
           const std::vector<std::size_t>& y_class, std::size_t n_classes,
           const TreeConfig& config, Rng& rng)
        : x_(x),
          y_real_(y_real),
          y_class_(y_class),
          n_classes_(n_classes),
          config_(config),
          rng_(rng),
          classify_(n_classes > 0) {}

    Tree grow(const std::vector<std::string>& class_names) {
        class_names_ = &class_names;
        std::vector<std::size_t> rows(x_.rows());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            rows[i] = i;
        }
        Tree tree;
        build(tree, rows, 0);
        return tree;
    }

  private:
    bool is_pure(const std::vector<std::size_t>& rows) const {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (classify_ ? y_class_[rows[i]] != y_class_[rows[0]]
                          : y_real_[rows[i]] != y_real_[rows[0]]) {
                return false;
            }
        }
        return true;
    }

    std::vector<std::size_t> candidate_features() {
        std::vector<std::size_t> all(x_.cols());
        for (std::size_t j = 0; j < all.size(); ++j) {
            all[j] = j;
        }
        if (config_.feature_subset == 0) {
            return all;
        }
        const std::size_t m = static_cast<std::size_t>(config_.feature_subset);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t pick = i + rng_.bounded(all.size() - i);
            std::swap(all[i], all[pick]);
        }
        all.resize(m);
        std::sort(all.begin(), all.end());
        return all;
    }

    double impurity(const std::vector<std::size_t>& rows) const {
        if (!classify_) {
            return sse_of(y_real_, rows);
        }
        std::vector<std::size_t> counts(n_classes_, 0);
        for (std::size_t r : rows) {
            ++counts[y_class_[r]];
        }
        return scaled_entropy(counts, rows.size());
    }

    Split best_split(const std::vector<std::size_t>& rows) {
        Split best;
        const double parent = impurity(rows);
        const std::size_t min_leaf = static_cast<std::size_t>(config_.min_leaf);

        for (std::size_t feature : candidate_features()) {
            std::vector<std::size_t> order = rows;
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return x_.at(a, feature) < x_.at(b, feature);
            });

            for (std::size_t p = 0; p + 1 < order.size(); ++p) {
                const double lo = x_.at(order[p], feature);
                const double hi = x_.at(order[p + 1], feature);
                if (lo == hi) {
                    continue;
                }
                const std::size_t n_left = p + 1;
                const std::size_t n_right = order.size() - n_left;
                if (n_left < min_leaf || n_right < min_leaf) {
                    continue;
                }
                std::vector<std::size_t> left(order.begin(), order.begin() + n_left);
                std::vector<std::size_t> right(order.begin() + n_left, order.end());
                const double gain = parent - impurity(left) - impurity(right);
                if (gain > best.gain) {
                    best.feature = feature;
                    best.threshold = 0.5 * (lo + hi);
                    best.gain = gain;
                    best.left = std::move(left);
                    best.right = std::move(right);
                }
            }
        }
        return best;
    }

    std::size_t make_leaf(Tree& tree, const std::vector<std::size_t>& rows) {
        TreeNode node;
        if (classify_) {
            std::vector<std::string> votes;
            votes.reserve(rows.size());
            for (std::size_t r : rows) {
                votes.push_back((*class_names_)[y_class_[r]]);
            }
            node.label = majority_label(votes);
        } else {
            double sum = 0.0;
            for (std::size_t r : rows) {
                sum += y_real_[r];
            }
            node.value = sum / static_cast<double>(rows.size());
        }
        tree.nodes.push_back(std::move(node));
        return tree.nodes.size() - 1;
    }

    std::size_t build(Tree& tree, const std::vector<std::size_t>& rows, std::int64_t depth) {
        const bool depth_capped = config_.max_depth >= 0 && depth >= config_.max_depth;
        if (depth_capped || rows.size() < 2 * static_cast<std::size_t>(config_.min_leaf) ||
            is_pure(rows)) {
            return make_leaf(tree, rows);
        }
        Split split = best_split(rows);
        if (split.left.empty()) {
            return make_leaf(tree, rows);
        }
        const std::size_t index = tree.nodes.size();
        tree.nodes.emplace_back();
        tree.nodes[index].feature = static_cast<std::int32_t>(split.feature);
        tree.nodes[index].threshold = split.threshold;
        const std::size_t left = build(tree, split.left, depth + 1);
        const std::size_t right = build(tree, split.right, depth + 1);
        tree.nodes[index].left = left;
        tree.nodes[index].right = right;
        return index;
    }

    const Matrix& x_;
    const std::vector<double>& y_real_;
    const std::vector<std::size_t>& y_class_;
    std::size_t n_classes_;
    TreeConfig config_;
    Rng& rng_;
    bool classify_;
    const std::vector<std::string>* class_names_ = nullptr;
};

}  // namespace

Tree grow_regression_tree(const Matrix& x, const std::vector<double>& y,
                          const TreeConfig& config, Rng& rng) {
    validate_config(config, x.rows(), x.cols());
    if (y.size() != x.rows()) {
        throw LengthMismatch("target count must equal the number of rows");
    }
    static const std::vector<std::size_t> no_classes;
    static const std::vector<std::string> no_names;
    Grower grower(x, y, no_classes, 0, config, rng);
    return grower.grow(no_names);
}

Tree grow_regression_tree(const Matrix& x, const std::vector<double>& y,
                          const TreeConfig& config) {
    Rng rng(config.seed);
    return grow_regression_tree(x, y, config, rng);
}

Tree grow_classification_tree(const Matrix& x, const std::vector<std::string>& y,
                              const TreeConfig& config, Rng& rng) {
    validate_config(config, x.rows(), x.cols());
    if (y.size() != x.rows()) {
        throw LengthMismatch("label count must equal the number of rows");
    }
    std::vector<std::string> names(y.begin(), y.end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < names.size(); ++i) {
        ids[names[i]] = i;
    }
    std::vector<std::size_t> y_class;
    y_class.reserve(y.size());
    for (const std::string& label : y) {
        y_class.push_back(ids[label]);
    }
    static const std::vector<double> no_reals;
    Grower grower(x, no_reals, y_class, names.size(), config, rng);
    return grower.grow(names);
}

Tree grow_classification_tree(const Matrix& x, const std::vector<std::string>& y,
                              const TreeConfig& config) {
    Rng rng(config.seed);
    return grow_classification_tree(x, y, config, rng);
}

namespace {

const TreeNode& descend(const Tree& tree, std::span<const double> x) {
    std::size_t index = 0;
    while (tree.nodes[index].feature >= 0) {
        const TreeNode& node = tree.nodes[index];
        index = x[static_cast<std::size_t>(node.feature)] < node.threshold ? node.left
                                                                           : node.right;
    }
    return tree.nodes[index];
}

}  // namespace

double tree_predict_value(const Tree& tree, std::span<const double> x) {
    return descend(tree, x).value;
}

const std::string& tree_predict_label(const Tree& tree, std::span<const double> x) {
    return descend(tree, x).label;
}

std::unique_ptr<Estimator> CartRegressor::clone_unfitted() const {
    return std::make_unique<CartRegressor>(config_);
}

const Tree& CartRegressor::tree() const {
    require_fitted();
    return tree_;
}

ParamMap CartRegressor::own_params() const {
    return {{"max_depth", config_.max_depth},
            {"min_leaf", config_.min_leaf},
            {"feature_subset", config_.feature_subset},
            {"seed", static_cast<std::int64_t>(config_.seed)}};
}

void CartRegressor::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "max_depth") {
        config_.max_depth = as_int(value, name);
    } else if (name == "min_leaf") {
        config_.min_leaf = as_int(value, name);
    } else if (name == "feature_subset") {
        config_.feature_subset = as_int(value, name);
    } else if (name == "seed") {
        config_.seed = static_cast<std::uint64_t>(as_int(value, name));
    } else {
        Estimator::apply_param(name, value);
    }
}

void CartRegressor::do_fit(const Matrix& x, const std::vector<double>& y) {
    tree_ = grow_regression_tree(x, y, config_);
}

double CartRegressor::do_predict_row(std::span<const double> x) const {
    return tree_predict_value(tree_, x);
}

std::unique_ptr<Estimator> CartClassifier::clone_unfitted() const {
    return std::make_unique<CartClassifier>(config_);
}

const Tree& CartClassifier::tree() const {
    require_fitted();
    return tree_;
}

ParamMap CartClassifier::own_params() const {
    return {{"max_depth", config_.max_depth},
            {"min_leaf", config_.min_leaf},
            {"feature_subset", config_.feature_subset},
            {"seed", static_cast<std::int64_t>(config_.seed)}};
}

void CartClassifier::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "max_depth") {
        config_.max_depth = as_int(value, name);
    } else if (name == "min_leaf") {
        config_.min_leaf = as_int(value, name);
    } else if (name == "feature_subset") {
        config_.feature_subset = as_int(value, name);
    } else if (name == "seed") {
        config_.seed = static_cast<std::uint64_t>(as_int(value, name));
    } else {
        Estimator::apply_param(name, value);
    }
}

void CartClassifier::do_fit(const Matrix& x, const std::vector<std::string>& y) {
    tree_ = grow_classification_tree(x, y, config_);
}

std::string CartClassifier::do_predict_row(std::span<const double> x) const {
    return tree_predict_label(tree_, x);
}

}  // namespace tsml::tabular
