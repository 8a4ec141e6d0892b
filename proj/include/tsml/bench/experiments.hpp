#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tsml/bench/dataset.hpp"
#include "tsml/classify/base.hpp"
#include "tsml/matrix.hpp"
#include "tsml/params.hpp"

namespace tsml::bench {

/// A registered classifier by name ("tsf", "knn-dtw", "knn-euclid") with
/// hyper-parameter overrides.
struct StrategySpec {
    std::string name;
    ParamMap params;
};

/**
 * @brief Everything one benchmark run needs: parsed datasets, strategies,
 *        how many resample folds, which metrics to record, and the master
 *        seed all per-item seeds derive from.
 */
struct ExperimentPlan {
    std::vector<DatasetFile> datasets;
    std::vector<StrategySpec> strategies;
    std::int64_t folds = 1;
    std::vector<std::string> metrics = {"accuracy"};
    std::uint64_t seed = 0;
};

struct ResultRow {
    std::string dataset;
    std::string strategy;
    std::int64_t fold = 0;
    std::string metric;
    double value = 0.0;
};

/// Field-wise equality; NaN values compare equal so degraded rows round trip.
bool operator==(const ResultRow& a, const ResultRow& b);

/// Sort key order: dataset, strategy, fold, metric.
bool row_before(const ResultRow& a, const ResultRow& b);

/**
 * @brief Benchmark outcome: one row per (dataset, strategy, fold, metric),
 *        sorted by that key. Items that failed contribute NaN rows plus a
 *        message here instead of aborting the run.
 */
struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::vector<std::string> failures;
};

std::unique_ptr<classify::TimeSeriesClassifier> make_strategy(const std::string& name,
                                                              const ParamMap& params);

/// The strategy adapted to the panel's shape: single series column as-is,
/// several series columns voted over by one clone per column.
std::unique_ptr<classify::TimeSeriesClassifier> strategy_for_panel(const StrategySpec& spec,
                                                                   const Panel& panel);

/// Sets a "seed" hyper-parameter when the estimator has one; no-op otherwise.
void seed_if_supported(Estimator& estimator, std::uint64_t seed);

struct Resample {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

/// Deterministic shuffle resample: about two thirds of the instances train,
/// the rest test. The same (dataset, fold, seed) always yields the same
/// split, independent of the strategy.
Resample resample_split(std::size_t n_instances, const std::string& dataset_name,
                        std::int64_t fold, std::uint64_t seed);

/// Runs every (dataset, strategy, fold) item, concurrently, with per-item
/// derived seeds; configuration problems throw ConfigError before any work.
ExperimentResult run_experiments(const ExperimentPlan& plan);

/// CSV with header dataset,strategy,fold,metric,value; 17 significant digits,
/// rows sorted by key.
std::string serialize_results(const std::vector<ResultRow>& rows);

std::vector<ResultRow> parse_results(const std::string& text);

/**
 * @brief Fold-averaged loss table for one metric: rows follow `strategies`,
 *        columns follow `datasets`, both sorted by name. Accuracy flips to
 *        1 - accuracy so lower is better for every metric. Datasets with any
 *        unusable (NaN) value are dropped and listed instead.
 */
struct LossPivot {
    std::vector<std::string> strategies;
    std::vector<std::string> datasets;
    Matrix losses = Matrix(1, 1);
    std::vector<std::string> dropped;
};

LossPivot pivot_losses(const std::vector<ResultRow>& rows, const std::string& metric);

}  // namespace tsml::bench
