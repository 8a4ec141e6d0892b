#include "tsml/compose/grid_search.hpp"

#include <cstdint>

#include "tsml/errors.hpp"

namespace tsml::compose {

namespace {

/// Cartesian product in lexicographic order: the first path is the most
/// significant digit, values in their listed order.
std::vector<ParamMap> enumerate_grid(const ParamGrid& grid) {
    std::vector<const std::string*> paths;
    std::vector<const std::vector<ParamValue>*> values;
    for (const auto& [path, candidates] : grid) {
        if (candidates.empty()) {
            throw InvalidParameter("no candidate values for '" + path + "'");
        }
        paths.push_back(&path);
        values.push_back(&candidates);
    }

    std::vector<ParamMap> points;
    std::vector<std::size_t> odometer(paths.size(), 0);
    while (true) {
        ParamMap point;
        for (std::size_t d = 0; d < paths.size(); ++d) {
            point.emplace(*paths[d], (*values[d])[odometer[d]]);
        }
        points.push_back(std::move(point));

        std::size_t d = paths.size();
        while (d > 0) {
            --d;
            if (++odometer[d] < values[d]->size()) {
                break;
            }
            odometer[d] = 0;
            if (d == 0) {
                return points;
            }
        }
    }
}

TimeSeries positions_subseries(const TimeSeries& y, const std::vector<std::size_t>& positions) {
    std::vector<TimePoint> points;
    std::vector<double> values;
    points.reserve(positions.size());
    values.reserve(positions.size());
    for (std::size_t i : positions) {
        points.push_back(y.time_at(i));
        values.push_back(y[i]);
    }
    return TimeSeries(TimeIndex(std::move(points)), std::move(values));
}

}  // namespace

GridSearchResult grid_search_forecaster(const TimeSeries& y,
                                        const forecast::Forecaster& prototype,
                                        const ParamGrid& grid, const SplitSpec& spec,
                                        const ForecastMetric& metric) {
    if (grid.empty()) {
        throw EmptyInput("empty parameter grid");
    }
    const std::vector<Fold> folds = temporal_split(y.size(), spec);

    std::vector<std::int64_t> steps(static_cast<std::size_t>(spec.fh_length));
    for (std::size_t s = 0; s < steps.size(); ++s) {
        steps[s] = static_cast<std::int64_t>(s) + 1;
    }
    const ForecastingHorizon fh = ForecastingHorizon::relative(steps);

    GridSearchResult result;
    result.grid_points = enumerate_grid(grid);
    result.cv_table = Matrix(result.grid_points.size(), folds.size());

    result.mean_scores.reserve(result.grid_points.size());
    for (std::size_t p = 0; p < result.grid_points.size(); ++p) {
        double total = 0.0;
        for (std::size_t f = 0; f < folds.size(); ++f) {
            std::unique_ptr<forecast::Forecaster> candidate = clone_as(prototype);
            candidate->set_params(result.grid_points[p]);
            candidate->fit(positions_subseries(y, folds[f].train), fh);

            const TimeSeries predicted = candidate->predict(fh);
            const TimeSeries actual = positions_subseries(y, folds[f].test);
            const double score = metric(actual.values(), predicted.values());
            result.cv_table.at(p, f) = score;
            total += score;
        }
        result.mean_scores.push_back(total / static_cast<double>(folds.size()));
    }

    result.best_index = 0;
    for (std::size_t p = 1; p < result.mean_scores.size(); ++p) {
        if (result.mean_scores[p] < result.mean_scores[result.best_index]) {
            result.best_index = p;
        }
    }
    result.best_params = result.grid_points[result.best_index];

    result.best_forecaster = clone_as(prototype);
    result.best_forecaster->set_params(result.best_params);
    result.best_forecaster->fit(y, fh);
    return result;
}

}  // namespace tsml::compose
