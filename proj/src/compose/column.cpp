#include "tsml/compose/column.hpp"

#include <set>

#include "tsml/errors.hpp"
#include "tsml/tabular/base.hpp"

namespace tsml::compose {

ColumnEnsembleClassifier::ColumnEnsembleClassifier(
    std::vector<std::pair<std::string, std::unique_ptr<classify::TimeSeriesClassifier>>>
        assignments)
    : assignments_(std::move(assignments)) {
    if (assignments_.empty()) {
        throw EmptyInput("column ensemble needs at least one assignment");
    }
    std::set<std::string> seen;
    for (const auto& [column, classifier] : assignments_) {
        if (classifier == nullptr) {
            throw InvalidParameter("assignment for column '" + column + "' is null");
        }
        if (!seen.insert(column).second) {
            throw InvalidParameter("column '" + column + "' is assigned twice");
        }
    }
}

std::unique_ptr<Estimator> ColumnEnsembleClassifier::clone_unfitted() const {
    std::vector<std::pair<std::string, std::unique_ptr<classify::TimeSeriesClassifier>>>
        assignments;
    assignments.reserve(assignments_.size());
    for (const auto& [column, classifier] : assignments_) {
        assignments.emplace_back(column, clone_as(*classifier));
    }
    return std::make_unique<ColumnEnsembleClassifier>(std::move(assignments));
}

std::vector<std::pair<std::string, const Estimator*>> ColumnEnsembleClassifier::components()
    const {
    std::vector<std::pair<std::string, const Estimator*>> out;
    out.reserve(assignments_.size());
    for (const auto& [column, classifier] : assignments_) {
        out.emplace_back(column, classifier.get());
    }
    return out;
}

std::vector<std::pair<std::string, Estimator*>> ColumnEnsembleClassifier::components() {
    std::vector<std::pair<std::string, Estimator*>> out;
    out.reserve(assignments_.size());
    for (auto& [column, classifier] : assignments_) {
        out.emplace_back(column, classifier.get());
    }
    return out;
}

Panel ColumnEnsembleClassifier::column_panel(const Panel& panel, const std::string& column) const {
    const std::size_t j = panel.column_index(column);
    if (panel.column_kind(j) != CellKind::Series) {
        throw NotASeriesColumn("column '" + column + "' is not a series column");
    }
    return Panel::build({{column, panel.column(j)}});
}

void ColumnEnsembleClassifier::do_fit(const Panel& panel, const std::vector<std::string>& labels) {
    std::set<std::string> assigned;
    for (const auto& [column, classifier] : assignments_) {
        assigned.insert(column);
    }
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        if (panel.column_kind(j) == CellKind::Series &&
            assigned.count(panel.column_names()[j]) == 0) {
            throw UnassignedColumn("series column '" + panel.column_names()[j] +
                                   "' has no classifier assigned");
        }
    }

    models_.clear();
    models_.reserve(assignments_.size());
    for (const auto& [column, classifier] : assignments_) {
        std::unique_ptr<classify::TimeSeriesClassifier> model = clone_as(*classifier);
        model->fit(column_panel(panel, column), labels);
        models_.push_back(std::move(model));
    }
}

std::vector<std::string> ColumnEnsembleClassifier::do_predict(const Panel& panel) const {
    std::vector<std::vector<std::string>> per_column;
    per_column.reserve(models_.size());
    for (std::size_t m = 0; m < models_.size(); ++m) {
        per_column.push_back(models_[m]->predict(column_panel(panel, assignments_[m].first)));
    }

    std::vector<std::string> out;
    out.reserve(panel.n_instances());
    for (std::size_t i = 0; i < panel.n_instances(); ++i) {
        std::vector<std::string> votes;
        votes.reserve(per_column.size());
        for (const std::vector<std::string>& column_votes : per_column) {
            votes.push_back(column_votes[i]);
        }
        out.push_back(tabular::majority_label(votes));
    }
    return out;
}

Panel column_concatenate(const Panel& panel, const std::vector<std::string>& columns) {
    if (columns.empty()) {
        throw EmptyInput("no columns to concatenate");
    }
    std::vector<std::size_t> indices;
    std::string joined;
    for (const std::string& name : columns) {
        const std::size_t j = panel.column_index(name);
        if (panel.column_kind(j) != CellKind::Series) {
            throw NotASeriesColumn("column '" + name + "' is not a series column");
        }
        indices.push_back(j);
        if (!joined.empty()) {
            joined += '_';
        }
        joined += name;
    }

    std::vector<TimeSeries> rows;
    rows.reserve(panel.n_instances());
    for (std::size_t i = 0; i < panel.n_instances(); ++i) {
        std::vector<double> values;
        for (std::size_t j : indices) {
            const std::vector<double>& part = panel.cell(i, j).series().values();
            values.insert(values.end(), part.begin(), part.end());
        }
        rows.push_back(TimeSeries::from_values(std::move(values)));
    }
    return Panel::of_series(joined, std::move(rows));
}

}  // namespace tsml::compose
