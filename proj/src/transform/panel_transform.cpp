#include "tsml/transform/panel_transform.hpp"

#include <utility>

#include "tsml/errors.hpp"

namespace tsml::transform {

namespace {

std::vector<std::string> split_names(const std::string& joined) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= joined.size()) {
        const std::size_t comma = joined.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(joined.substr(start));
            break;
        }
        parts.push_back(joined.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

std::string join_names(const std::vector<std::string>& parts) {
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            joined += ',';
        }
        joined += parts[i];
    }
    return joined;
}

}  // namespace

void PanelTransformer::fit(const Panel& panel) {
    clear_fitted();
    do_fit(panel);
    mark_fitted();
}

Panel PanelTransformer::transform(const Panel& panel) const {
    require_fitted();
    return do_transform(panel);
}

Panel PanelTransformer::fit_transform(const Panel& panel) {
    fit(panel);
    return transform(panel);
}

void PanelTransformer::do_fit(const Panel&) {}

std::unique_ptr<Estimator> TabularizeTransformer::clone_unfitted() const {
    return std::make_unique<TabularizeTransformer>();
}

Panel TabularizeTransformer::do_transform(const Panel& panel) const {
    std::vector<std::pair<std::string, std::vector<Cell>>> out;
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        const std::string& name = panel.column_names()[j];
        const std::vector<Cell>& column = panel.column(j);
        if (panel.column_kind(j) != CellKind::Series) {
            out.emplace_back(name, column);
            continue;
        }
        const std::size_t length = column.front().series().size();
        for (const Cell& cell : column) {
            if (cell.series().size() != length) {
                throw LengthMismatch("column '" + name +
                                     "' mixes series lengths; tabularization needs equal lengths");
            }
        }
        for (std::size_t t = 0; t < length; ++t) {
            std::vector<Cell> cells;
            cells.reserve(column.size());
            for (const Cell& cell : column) {
                cells.push_back(Cell::numeric(cell.series().values()[t]));
            }
            out.emplace_back(name + "_" + std::to_string(t), std::move(cells));
        }
    }
    return Panel::build(std::move(out));
}

SummaryFeatureTransformer::SummaryFeatureTransformer(std::vector<SummaryFeature> features)
    : features_(std::move(features)) {
    if (features_.empty()) {
        throw InvalidParameter("features must not be empty");
    }
}

std::unique_ptr<Estimator> SummaryFeatureTransformer::clone_unfitted() const {
    return std::make_unique<SummaryFeatureTransformer>(features_);
}

ParamMap SummaryFeatureTransformer::own_params() const {
    std::vector<std::string> names;
    names.reserve(features_.size());
    for (SummaryFeature feature : features_) {
        names.push_back(feature_name(feature));
    }
    return {{"features", join_names(names)}};
}

void SummaryFeatureTransformer::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "features") {
        std::vector<SummaryFeature> parsed;
        for (const std::string& part : split_names(as_string(value, name))) {
            parsed.push_back(feature_from_name(part));
        }
        if (parsed.empty()) {
            throw InvalidParameter("features must not be empty");
        }
        features_ = std::move(parsed);
        return;
    }
    Estimator::apply_param(name, value);
}

Panel SummaryFeatureTransformer::do_transform(const Panel& panel) const {
    std::vector<std::pair<std::string, std::vector<Cell>>> out;
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        const std::string& name = panel.column_names()[j];
        const std::vector<Cell>& column = panel.column(j);
        if (panel.column_kind(j) != CellKind::Series) {
            out.emplace_back(name, column);
            continue;
        }
        std::vector<std::vector<Cell>> feature_cells(features_.size());
        for (const Cell& cell : column) {
            const std::vector<double> row = extract_summary_features(cell.series(), features_);
            for (std::size_t f = 0; f < features_.size(); ++f) {
                feature_cells[f].push_back(Cell::numeric(row[f]));
            }
        }
        for (std::size_t f = 0; f < features_.size(); ++f) {
            out.emplace_back(name + "_" + feature_name(features_[f]),
                             std::move(feature_cells[f]));
        }
    }
    return Panel::build(std::move(out));
}

TimeBinTransformer::TimeBinTransformer(std::int64_t n_bins, Aggregation agg)
    : n_bins_(n_bins), agg_(agg) {
    if (n_bins_ < 1) {
        throw InvalidParameter("n_bins must be >= 1");
    }
}

std::unique_ptr<Estimator> TimeBinTransformer::clone_unfitted() const {
    return std::make_unique<TimeBinTransformer>(n_bins_, agg_);
}

ParamMap TimeBinTransformer::own_params() const {
    return {{"n_bins", n_bins_}, {"agg", aggregation_name(agg_)}};
}

void TimeBinTransformer::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "n_bins") {
        const std::int64_t bins = as_int(value, name);
        if (bins < 1) {
            throw InvalidParameter("n_bins must be >= 1");
        }
        n_bins_ = bins;
        return;
    }
    if (name == "agg") {
        agg_ = aggregation_from_name(as_string(value, name));
        return;
    }
    Estimator::apply_param(name, value);
}

Panel TimeBinTransformer::do_transform(const Panel& panel) const {
    std::vector<std::pair<std::string, std::vector<Cell>>> out;
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        const std::string& name = panel.column_names()[j];
        const std::vector<Cell>& column = panel.column(j);
        if (panel.column_kind(j) != CellKind::Series) {
            out.emplace_back(name, column);
            continue;
        }
        std::vector<Cell> cells;
        cells.reserve(column.size());
        for (const Cell& cell : column) {
            cells.push_back(Cell::series(time_bin_aggregate(cell.series(), n_bins_, agg_)));
        }
        out.emplace_back(name, std::move(cells));
    }
    return Panel::build(std::move(out));
}

PanelDetrender::PanelDetrender(Detrender prototype) : prototype_(std::move(prototype)) {}

std::unique_ptr<Estimator> PanelDetrender::clone_unfitted() const {
    std::unique_ptr<Detrender> proto = clone_as(prototype_);
    return std::make_unique<PanelDetrender>(std::move(*proto));
}

std::vector<std::pair<std::string, const Estimator*>> PanelDetrender::components() const {
    return {{"detrender", &prototype_}};
}

std::vector<std::pair<std::string, Estimator*>> PanelDetrender::components() {
    return {{"detrender", &prototype_}};
}

Panel PanelDetrender::do_transform(const Panel& panel) const {
    std::vector<std::pair<std::string, std::vector<Cell>>> out;
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        const std::string& name = panel.column_names()[j];
        const std::vector<Cell>& column = panel.column(j);
        if (panel.column_kind(j) != CellKind::Series) {
            out.emplace_back(name, column);
            continue;
        }
        std::vector<Cell> cells;
        cells.reserve(column.size());
        for (const Cell& cell : column) {
            std::unique_ptr<Detrender> local = clone_as(prototype_);
            local->fit(cell.series());
            cells.push_back(Cell::series(local->transform(cell.series())));
        }
        out.emplace_back(name, std::move(cells));
    }
    return Panel::build(std::move(out));
}

}  // namespace tsml::transform
