#include "tsml/classify/base.hpp"

#include "tsml/errors.hpp"

namespace tsml::classify {

void TimeSeriesClassifier::fit(const Panel& panel, const std::vector<std::string>& labels) {
    if (labels.size() != panel.n_instances()) {
        throw LengthMismatch("got " + std::to_string(labels.size()) + " labels for " +
                             std::to_string(panel.n_instances()) + " instances");
    }
    clear_fitted();
    do_fit(panel, labels);
    mark_fitted();
}

std::vector<std::string> TimeSeriesClassifier::predict(const Panel& panel) const {
    require_fitted();
    return do_predict(panel);
}

const std::vector<Cell>& single_series_column(const Panel& panel) {
    if (panel.n_columns() != 1) {
        throw InvalidParameter("expected a single-column panel, got " +
                               std::to_string(panel.n_columns()) + " columns");
    }
    if (panel.column_kind(0) != CellKind::Series) {
        throw NotASeriesColumn("column '" + panel.column_names()[0] + "' is not a series column");
    }
    return panel.column(0);
}

std::size_t common_series_length(const std::vector<Cell>& column) {
    const std::size_t length = column.front().series().size();
    for (const Cell& cell : column) {
        if (cell.series().size() != length) {
            throw LengthMismatch("series lengths differ within the column");
        }
    }
    return length;
}

}  // namespace tsml::classify
