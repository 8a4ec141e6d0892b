#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tsml/compose/split.hpp"
#include "tsml/forecast/forecaster.hpp"
#include "tsml/matrix.hpp"
#include "tsml/params.hpp"

namespace tsml::compose {

/// Loss over (actual, predicted); grid search always minimizes, so accuracy-
/// like scores must be passed as errors.
using ForecastMetric =
    std::function<double(std::span<const double>, std::span<const double>)>;

/// Candidate values per parameter path; the map key order (lexicographic)
/// fixes the enumeration order of the Cartesian product.
using ParamGrid = std::map<std::string, std::vector<ParamValue>>;

struct GridSearchResult {
    std::vector<ParamMap> grid_points;
    Matrix cv_table = Matrix(1, 1);
    std::vector<double> mean_scores;
    std::size_t best_index = 0;
    ParamMap best_params;
    std::unique_ptr<forecast::Forecaster> best_forecaster;
};

/// Evaluates every grid point over the temporal folds, picks the minimum mean
/// metric (ties to the earliest point), and refits that configuration on the
/// whole series.
GridSearchResult grid_search_forecaster(const TimeSeries& y,
                                        const forecast::Forecaster& prototype,
                                        const ParamGrid& grid, const SplitSpec& spec,
                                        const ForecastMetric& metric);

}  // namespace tsml::compose
