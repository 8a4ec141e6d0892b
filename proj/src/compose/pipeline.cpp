#include "tsml/compose/pipeline.hpp"

#include <set>

#include "tsml/errors.hpp"
#include "tsml/matrix.hpp"

namespace tsml::compose {

namespace {

Matrix to_feature_matrix(const Panel& panel) {
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        if (panel.column_kind(j) != CellKind::Numeric) {
            throw IncompatibleStep("tabular learner needs numeric columns, but '" +
                                   panel.column_names()[j] + "' is not numeric");
        }
    }
    Matrix x(panel.n_instances(), panel.n_columns());
    for (std::size_t i = 0; i < panel.n_instances(); ++i) {
        for (std::size_t j = 0; j < panel.n_columns(); ++j) {
            x.at(i, j) = panel.cell(i, j).numeric();
        }
    }
    return x;
}

bool has_series_column(const Panel& panel) {
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        if (panel.column_kind(j) == CellKind::Series) {
            return true;
        }
    }
    return false;
}

}  // namespace

TabularPanelClassifier::TabularPanelClassifier(std::unique_ptr<tabular::Classifier> classifier)
    : prototype_(std::move(classifier)) {
    if (prototype_ == nullptr) {
        throw InvalidParameter("tabular panel classifier needs a classifier");
    }
}

std::unique_ptr<Estimator> TabularPanelClassifier::clone_unfitted() const {
    return std::make_unique<TabularPanelClassifier>(clone_as(*prototype_));
}

ParamMap TabularPanelClassifier::own_params() const { return prototype_->get_params(); }

void TabularPanelClassifier::apply_param(const std::string& name, const ParamValue& value) {
    prototype_->set_params({{name, value}});
}

void TabularPanelClassifier::do_fit(const Panel& panel, const std::vector<std::string>& labels) {
    std::unique_ptr<tabular::Classifier> model = clone_as(*prototype_);
    model->fit(to_feature_matrix(panel), labels);
    model_ = std::move(model);
}

std::vector<std::string> TabularPanelClassifier::do_predict(const Panel& panel) const {
    return model_->predict(to_feature_matrix(panel));
}

Pipeline::Pipeline(
    std::vector<std::pair<std::string, std::unique_ptr<transform::PanelTransformer>>> steps,
    std::string final_name, std::unique_ptr<classify::TimeSeriesClassifier> final)
    : steps_(std::move(steps)), final_name_(std::move(final_name)), final_(std::move(final)) {
    if (final_ == nullptr) {
        throw InvalidParameter("pipeline needs a final estimator");
    }
    std::set<std::string> names{final_name_};
    if (final_name_.empty()) {
        throw InvalidParameter("pipeline step names must be non-empty");
    }
    for (const auto& [name, step] : steps_) {
        if (step == nullptr) {
            throw InvalidParameter("pipeline step '" + name + "' is null");
        }
        if (name.empty()) {
            throw InvalidParameter("pipeline step names must be non-empty");
        }
        if (!names.insert(name).second) {
            throw InvalidParameter("duplicate pipeline step name '" + name + "'");
        }
    }
}

std::unique_ptr<Estimator> Pipeline::clone_unfitted() const {
    std::vector<std::pair<std::string, std::unique_ptr<transform::PanelTransformer>>> steps;
    steps.reserve(steps_.size());
    for (const auto& [name, step] : steps_) {
        steps.emplace_back(name, clone_as(*step));
    }
    return std::make_unique<Pipeline>(std::move(steps), final_name_, clone_as(*final_));
}

std::vector<std::pair<std::string, const Estimator*>> Pipeline::components() const {
    std::vector<std::pair<std::string, const Estimator*>> out;
    out.reserve(steps_.size() + 1);
    for (const auto& [name, step] : steps_) {
        out.emplace_back(name, step.get());
    }
    out.emplace_back(final_name_, final_.get());
    return out;
}

std::vector<std::pair<std::string, Estimator*>> Pipeline::components() {
    std::vector<std::pair<std::string, Estimator*>> out;
    out.reserve(steps_.size() + 1);
    for (const auto& [name, step] : steps_) {
        out.emplace_back(name, step.get());
    }
    out.emplace_back(final_name_, final_.get());
    return out;
}

void Pipeline::do_fit(const Panel& panel, const std::vector<std::string>& labels) {
    Panel current = panel;
    for (auto& [name, step] : steps_) {
        if (!has_series_column(current)) {
            throw IncompatibleStep("step '" + name + "' needs a series column, but none is left");
        }
        current = step->fit_transform(current);
    }
    final_->fit(current, labels);
}

std::vector<std::string> Pipeline::do_predict(const Panel& panel) const {
    Panel current = panel;
    for (const auto& [name, step] : steps_) {
        current = step->transform(current);
    }
    return final_->predict(current);
}

}  // namespace tsml::compose
