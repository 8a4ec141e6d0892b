#include "tsml/classify/knn.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "tsml/errors.hpp"
#include "tsml/tabular/base.hpp"

namespace tsml::classify {

TimeSeriesKnnClassifier::TimeSeriesKnnClassifier(std::int64_t k, distance::DistanceSpec spec)
    : k_(k), spec_(std::move(spec)) {
    if (k_ < 1) {
        throw InvalidK("k must be >= 1, got " + std::to_string(k_));
    }
}

std::unique_ptr<Estimator> TimeSeriesKnnClassifier::clone_unfitted() const {
    return std::make_unique<TimeSeriesKnnClassifier>(k_, spec_);
}

ParamMap TimeSeriesKnnClassifier::own_params() const {
    return {{"k", k_},
            {"distance", distance::distance_kind_name(spec_.kind)},
            {"band", spec_.band ? *spec_.band : -1.0},
            {"g", spec_.g}};
}

void TimeSeriesKnnClassifier::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "k") {
        const std::int64_t k = as_int(value, name);
        if (k < 1) {
            throw InvalidK("k must be >= 1, got " + std::to_string(k));
        }
        k_ = k;
        return;
    }
    if (name == "distance") {
        spec_.kind = distance::distance_kind_from_name(as_string(value, name));
        return;
    }
    if (name == "band") {
        const double band = as_double(value, name);
        if (band < 0.0) {
            spec_.band.reset();
        } else if (band > 1.0) {
            throw InvalidParameter("band fraction must lie in [0, 1]");
        } else {
            spec_.band = band;
        }
        return;
    }
    if (name == "g") {
        const double g = as_double(value, name);
        if (g < 0.0) {
            throw InvalidParameter("g must be >= 0");
        }
        spec_.g = g;
        return;
    }
    Estimator::apply_param(name, value);
}

void TimeSeriesKnnClassifier::do_fit(const Panel& panel, const std::vector<std::string>& labels) {
    const std::vector<Cell>& column = single_series_column(panel);
    const std::size_t length = common_series_length(column);
    if (k_ > static_cast<std::int64_t>(column.size())) {
        throw InvalidK("k = " + std::to_string(k_) + " exceeds the " +
                       std::to_string(column.size()) + " training instances");
    }

    train_.clear();
    train_.reserve(column.size());
    for (const Cell& cell : column) {
        train_.push_back(cell.series().values());
    }
    labels_ = labels;
    series_length_ = length;
}

std::string TimeSeriesKnnClassifier::classify(const TimeSeries& query) const {
    require_fitted();
    if (query.size() != series_length_) {
        throw LengthMismatch("query length " + std::to_string(query.size()) +
                             " does not match the training length " +
                             std::to_string(series_length_));
    }

    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(train_.size());
    for (std::size_t i = 0; i < train_.size(); ++i) {
        order.emplace_back(distance::compute_distance(query.values(), train_[i], spec_), i);
    }
    std::sort(order.begin(), order.end());

    std::vector<std::string> votes;
    votes.reserve(static_cast<std::size_t>(k_));
    for (std::size_t i = 0; i < static_cast<std::size_t>(k_); ++i) {
        votes.push_back(labels_[order[i].second]);
    }
    return tabular::majority_label(votes);
}

std::vector<std::string> TimeSeriesKnnClassifier::do_predict(const Panel& panel) const {
    const std::vector<Cell>& column = single_series_column(panel);
    std::vector<std::string> out;
    out.reserve(column.size());
    for (const Cell& cell : column) {
        out.push_back(classify(cell.series()));
    }
    return out;
}

}  // namespace tsml::classify
