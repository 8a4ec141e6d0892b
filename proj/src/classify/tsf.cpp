#include "tsml/classify/tsf.hpp"

#include <cmath>
#include <span>

#include "tsml/errors.hpp"
#include "tsml/matrix.hpp"
#include "tsml/rng.hpp"
#include "tsml/tabular/base.hpp"
#include "tsml/util.hpp"

namespace tsml::classify {

TimeSeriesForestClassifier::TimeSeriesForestClassifier(std::int64_t n_trees, std::uint64_t seed)
    : n_trees_(n_trees), seed_(seed) {
    if (n_trees_ < 1) {
        throw InvalidParameter("n_trees must be >= 1, got " + std::to_string(n_trees_));
    }
}

std::unique_ptr<Estimator> TimeSeriesForestClassifier::clone_unfitted() const {
    return std::make_unique<TimeSeriesForestClassifier>(n_trees_, seed_);
}

ParamMap TimeSeriesForestClassifier::own_params() const {
    return {{"n_trees", n_trees_}, {"seed", static_cast<std::int64_t>(seed_)}};
}

void TimeSeriesForestClassifier::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "n_trees") {
        const std::int64_t n = as_int(value, name);
        if (n < 1) {
            throw InvalidParameter("n_trees must be >= 1, got " + std::to_string(n));
        }
        n_trees_ = n;
        return;
    }
    if (name == "seed") {
        seed_ = static_cast<std::uint64_t>(as_int(value, name));
        return;
    }
    Estimator::apply_param(name, value);
}

const std::vector<transform::Interval>& TimeSeriesForestClassifier::intervals_of(
    std::size_t tree) const {
    require_fitted();
    if (tree >= intervals_.size()) {
        throw IndexOutOfRange("tree " + std::to_string(tree) + " of " +
                              std::to_string(intervals_.size()));
    }
    return intervals_[tree];
}

std::vector<double> TimeSeriesForestClassifier::interval_features(
    const std::vector<double>& values, const std::vector<transform::Interval>& intervals) const {
    std::vector<double> features;
    features.reserve(intervals.size() * 3);
    for (const transform::Interval& iv : intervals) {
        const std::span<const double> window(values.data() + iv.start, iv.length());
        features.push_back(mean_of(window));
        features.push_back(sample_std(window));
        features.push_back(slope_of(window));
    }
    return features;
}

void TimeSeriesForestClassifier::do_fit(const Panel& panel,
                                        const std::vector<std::string>& labels) {
    const std::vector<Cell>& column = single_series_column(panel);
    const std::size_t length = common_series_length(column);
    if (length < static_cast<std::size_t>(transform::kMinIntervalLength)) {
        throw SeriesTooShort("interval features need series of length >= " +
                             std::to_string(transform::kMinIntervalLength) + ", got " +
                             std::to_string(length));
    }

    const std::size_t n_intervals =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(length))));

    intervals_.clear();
    trees_.clear();
    intervals_.reserve(static_cast<std::size_t>(n_trees_));
    trees_.reserve(static_cast<std::size_t>(n_trees_));
    series_length_ = length;

    for (std::int64_t t = 0; t < n_trees_; ++t) {
        std::vector<transform::Interval> intervals = transform::draw_random_intervals(
            length, n_intervals, static_cast<std::size_t>(transform::kMinIntervalLength),
            derive_seed(seed_, static_cast<std::uint64_t>(t)));

        Matrix x(column.size(), intervals.size() * 3);
        for (std::size_t i = 0; i < column.size(); ++i) {
            const std::vector<double> row =
                interval_features(column[i].series().values(), intervals);
            for (std::size_t j = 0; j < row.size(); ++j) {
                x.at(i, j) = row[j];
            }
        }

        trees_.push_back(tabular::grow_classification_tree(x, labels, tabular::TreeConfig{}));
        intervals_.push_back(std::move(intervals));
    }
}

std::string TimeSeriesForestClassifier::classify(const TimeSeries& query) const {
    require_fitted();
    if (query.size() != series_length_) {
        throw LengthMismatch("query length " + std::to_string(query.size()) +
                             " does not match the training length " +
                             std::to_string(series_length_));
    }
    std::vector<std::string> votes;
    votes.reserve(trees_.size());
    for (std::size_t t = 0; t < trees_.size(); ++t) {
        const std::vector<double> features = interval_features(query.values(), intervals_[t]);
        votes.push_back(tabular::tree_predict_label(trees_[t], features));
    }
    return tabular::majority_label(votes);
}

std::vector<std::string> TimeSeriesForestClassifier::do_predict(const Panel& panel) const {
    const std::vector<Cell>& column = single_series_column(panel);
    std::vector<std::string> out;
    out.reserve(column.size());
    for (const Cell& cell : column) {
        out.push_back(classify(cell.series()));
    }
    return out;
}

}  // namespace tsml::classify
