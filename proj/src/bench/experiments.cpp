#include "tsml/bench/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "tsml/bench/metrics.hpp"
#include "tsml/classify/knn.hpp"
#include "tsml/classify/tsf.hpp"
#include "tsml/compose/column.hpp"
#include "tsml/distance/elastic.hpp"
#include "tsml/errors.hpp"
#include "tsml/rng.hpp"
#include "tsml/util.hpp"

namespace tsml::bench {

namespace {

constexpr std::string_view kResultsHeader = "dataset,strategy,fold,metric,value";

double evaluate_metric(const std::string& metric, const std::vector<std::string>& actual,
                       const std::vector<std::string>& predicted) {
    if (metric == "accuracy") {
        return accuracy(actual, predicted);
    }
    if (metric == "error-rate") {
        return 1.0 - accuracy(actual, predicted);
    }
    throw ConfigError("unknown metric '" + metric + "'");
}

void require_known_metrics(const std::vector<std::string>& metrics) {
    if (metrics.empty()) {
        throw ConfigError("no metrics configured");
    }
    std::set<std::string> seen;
    for (const std::string& metric : metrics) {
        if (metric != "accuracy" && metric != "error-rate") {
            throw ConfigError("unknown metric '" + metric +
                              "' (available: accuracy, error-rate)");
        }
        if (!seen.insert(metric).second) {
            throw ConfigError("duplicate metric '" + metric + "'");
        }
    }
}

std::uint64_t item_stream(const std::string& dataset, const std::string& strategy,
                          std::int64_t fold) {
    return hash_name(dataset + "\x1f" + strategy) ^ static_cast<std::uint64_t>(fold);
}

std::vector<std::string> labels_at(const std::vector<std::string>& labels,
                                   const std::vector<std::size_t>& rows) {
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (std::size_t i : rows) {
        out.push_back(labels[i]);
    }
    return out;
}

std::vector<ResultRow> run_item(const DatasetFile& data, const StrategySpec& spec,
                                std::int64_t fold, std::uint64_t master_seed,
                                const std::vector<std::string>& metrics) {
    const Resample split =
        resample_split(data.panel.n_instances(), data.name, fold, master_seed);
    const Panel train = slice_instances(data.panel, split.train);
    const Panel test = slice_instances(data.panel, split.test);

    std::unique_ptr<classify::TimeSeriesClassifier> model =
        strategy_for_panel(spec, data.panel);
    seed_if_supported(*model,
                      derive_seed(master_seed, item_stream(data.name, spec.name, fold)));

    model->fit(train, labels_at(data.labels, split.train));
    const std::vector<std::string> predicted = model->predict(test);
    const std::vector<std::string> actual = labels_at(data.labels, split.test);

    std::vector<ResultRow> rows;
    rows.reserve(metrics.size());
    for (const std::string& metric : metrics) {
        rows.push_back(
            {data.name, spec.name, fold, metric, evaluate_metric(metric, actual, predicted)});
    }
    return rows;
}

/// Tiny line/field splitter for the results CSV; 1-based line numbers.
std::vector<std::pair<std::string_view, std::size_t>> csv_lines(const std::string& text) {
    std::vector<std::pair<std::string_view, std::size_t>> lines;
    std::size_t begin = 0;
    std::size_t number = 1;
    while (begin < text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string_view line(text.data() + begin, end - begin);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.emplace_back(line, number);
        ++number;
        begin = end + 1;
    }
    return lines;
}

void require_writable(const std::string& field, const std::string& what) {
    if (field.empty()) {
        throw InvalidParameter(what + " must be non-empty");
    }
    if (field.find_first_of(",\r\n") != std::string::npos) {
        throw InvalidParameter(what + " '" + field + "' cannot hold commas or line breaks");
    }
}

}  // namespace

bool operator==(const ResultRow& a, const ResultRow& b) {
    const bool same_value =
        a.value == b.value || (std::isnan(a.value) && std::isnan(b.value));
    return same_value && a.dataset == b.dataset && a.strategy == b.strategy &&
           a.fold == b.fold && a.metric == b.metric;
}

bool row_before(const ResultRow& a, const ResultRow& b) {
    return std::tie(a.dataset, a.strategy, a.fold, a.metric) <
           std::tie(b.dataset, b.strategy, b.fold, b.metric);
}

std::unique_ptr<classify::TimeSeriesClassifier> make_strategy(const std::string& name,
                                                              const ParamMap& params) {
    std::unique_ptr<classify::TimeSeriesClassifier> model;
    if (name == "tsf") {
        model = std::make_unique<classify::TimeSeriesForestClassifier>();
    } else if (name == "knn-dtw") {
        model = std::make_unique<classify::TimeSeriesKnnClassifier>(
            1, distance::DistanceSpec::dtw());
    } else if (name == "knn-euclid") {
        model = std::make_unique<classify::TimeSeriesKnnClassifier>(
            1, distance::DistanceSpec::euclidean());
    } else {
        throw ConfigError("unknown strategy '" + name +
                          "' (available: tsf, knn-dtw, knn-euclid)");
    }
    model->set_params(params);
    return model;
}

std::unique_ptr<classify::TimeSeriesClassifier> strategy_for_panel(const StrategySpec& spec,
                                                                   const Panel& panel) {
    std::unique_ptr<classify::TimeSeriesClassifier> base =
        make_strategy(spec.name, spec.params);

    std::vector<std::string> series_columns;
    for (std::size_t j = 0; j < panel.n_columns(); ++j) {
        if (panel.column_kind(j) == CellKind::Series) {
            series_columns.push_back(panel.column_names()[j]);
        }
    }
    if (series_columns.size() <= 1) {
        return base;
    }

    std::vector<std::pair<std::string, std::unique_ptr<classify::TimeSeriesClassifier>>>
        assignments;
    assignments.reserve(series_columns.size());
    for (const std::string& column : series_columns) {
        assignments.emplace_back(column, clone_as(*base));
    }
    return std::make_unique<compose::ColumnEnsembleClassifier>(std::move(assignments));
}

void seed_if_supported(Estimator& estimator, std::uint64_t seed) {
    const std::int64_t value = static_cast<std::int64_t>(seed >> 1);
    ParamMap updates;
    for (const auto& [path, unused] : estimator.get_params()) {
        if (path == "seed" || path.ends_with("__seed")) {
            updates.emplace(path, value);
        }
    }
    if (!updates.empty()) {
        estimator.set_params(updates);
    }
}

Resample resample_split(std::size_t n_instances, const std::string& dataset_name,
                        std::int64_t fold, std::uint64_t seed) {
    if (n_instances < 2) {
        throw TooFewRows("resampling needs at least 2 instances, got " +
                         std::to_string(n_instances));
    }
    if (fold < 0) {
        throw InvalidParameter("fold numbers start at 0");
    }
    Rng rng(derive_seed(seed, hash_name(dataset_name) ^ static_cast<std::uint64_t>(fold)));
    std::vector<std::size_t> order(n_instances);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);

    const std::size_t train_size = std::min((2 * n_instances + 2) / 3, n_instances - 1);
    Resample split;
    split.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(train_size));
    split.test.assign(order.begin() + static_cast<std::ptrdiff_t>(train_size), order.end());
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

ExperimentResult run_experiments(const ExperimentPlan& plan) {
    if (plan.datasets.empty()) {
        throw ConfigError("no datasets configured");
    }
    if (plan.strategies.empty()) {
        throw ConfigError("no strategies configured");
    }
    if (plan.folds < 1) {
        throw ConfigError("folds must be >= 1");
    }
    require_known_metrics(plan.metrics);

    std::set<std::string> names;
    for (const DatasetFile& data : plan.datasets) {
        if (!names.insert(data.name).second) {
            throw ConfigError("duplicate dataset name '" + data.name + "'");
        }
    }
    names.clear();
    for (const StrategySpec& spec : plan.strategies) {
        if (!names.insert(spec.name).second) {
            throw ConfigError("duplicate strategy '" + spec.name + "'");
        }
        try {
            make_strategy(spec.name, spec.params);
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            throw ConfigError("strategy '" + spec.name + "': " + e.what());
        }
    }

    struct Item {
        const DatasetFile* dataset;
        const StrategySpec* strategy;
        std::int64_t fold;
    };
    std::vector<Item> items;
    items.reserve(plan.datasets.size() * plan.strategies.size() *
                  static_cast<std::size_t>(plan.folds));
    for (const DatasetFile& data : plan.datasets) {
        for (const StrategySpec& spec : plan.strategies) {
            for (std::int64_t fold = 0; fold < plan.folds; ++fold) {
                items.push_back({&data, &spec, fold});
            }
        }
    }

    std::vector<std::vector<ResultRow>> item_rows(items.size());
    std::vector<std::string> item_failures(items.size());
    std::atomic<std::size_t> cursor{0};

    const auto worker = [&]() {
        while (true) {
            const std::size_t index = cursor.fetch_add(1);
            if (index >= items.size()) {
                return;
            }
            const Item& item = items[index];
            try {
                item_rows[index] =
                    run_item(*item.dataset, *item.strategy, item.fold, plan.seed, plan.metrics);
            } catch (const std::exception& e) {
                for (const std::string& metric : plan.metrics) {
                    item_rows[index].push_back({item.dataset->name, item.strategy->name,
                                                item.fold, metric,
                                                std::numeric_limits<double>::quiet_NaN()});
                }
                item_failures[index] = item.dataset->name + "/" + item.strategy->name +
                                       "/fold " + std::to_string(item.fold) + ": " + e.what();
            }
        }
    };

    const std::size_t n_threads =
        std::min(items.size(),
                 static_cast<std::size_t>(std::max(1u, std::thread::hardware_concurrency())));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& thread : pool) {
            thread.join();
        }
    }

    ExperimentResult result;
    for (std::vector<ResultRow>& rows : item_rows) {
        result.rows.insert(result.rows.end(), std::make_move_iterator(rows.begin()),
                           std::make_move_iterator(rows.end()));
    }
    std::sort(result.rows.begin(), result.rows.end(), row_before);
    for (std::string& failure : item_failures) {
        if (!failure.empty()) {
            result.failures.push_back(std::move(failure));
        }
    }
    return result;
}

std::string serialize_results(const std::vector<ResultRow>& rows) {
    for (const ResultRow& row : rows) {
        require_writable(row.dataset, "dataset name");
        require_writable(row.strategy, "strategy name");
        require_writable(row.metric, "metric name");
        if (row.fold < 0) {
            throw InvalidParameter("fold numbers start at 0");
        }
    }
    std::vector<ResultRow> sorted = rows;
    std::stable_sort(sorted.begin(), sorted.end(), row_before);

    std::string out{kResultsHeader};
    out += "\n";
    for (const ResultRow& row : sorted) {
        out += row.dataset + "," + row.strategy + "," + std::to_string(row.fold) + "," +
               row.metric + "," + format_double(row.value) + "\n";
    }
    return out;
}

std::vector<ResultRow> parse_results(const std::string& text) {
    const auto lines = csv_lines(text);
    if (lines.empty() || lines[0].first != kResultsHeader) {
        throw ParseError(1, 1, "expected header " + std::string(kResultsHeader));
    }

    std::vector<ResultRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [line, number] = lines[i];
        if (line.empty()) {
            continue;
        }
        std::vector<std::pair<std::string_view, std::size_t>> fields;
        std::size_t begin = 0;
        while (true) {
            const std::size_t end = line.find(',', begin);
            if (end == std::string_view::npos) {
                fields.emplace_back(line.substr(begin), begin + 1);
                break;
            }
            fields.emplace_back(line.substr(begin, end - begin), begin + 1);
            begin = end + 1;
        }
        if (fields.size() != 5) {
            throw ParseError(number, 1,
                             "expected 5 fields, got " + std::to_string(fields.size()));
        }

        ResultRow row;
        row.dataset = std::string(fields[0].first);
        row.strategy = std::string(fields[1].first);
        row.metric = std::string(fields[3].first);

        {
            const auto& [field, column] = fields[2];
            const char* end = field.data() + field.size();
            const auto [ptr, ec] = std::from_chars(field.data(), end, row.fold);
            if (ec != std::errc{} || ptr != end) {
                throw ParseError(number, column,
                                 "not a fold number: '" + std::string(field) + "'");
            }
        }
        {
            const auto& [field, column] = fields[4];
            const char* end = field.data() + field.size();
            const auto [ptr, ec] = std::from_chars(field.data(), end, row.value);
            if (ec != std::errc{} || ptr != end) {
                throw ParseError(number, column,
                                 "not a metric value: '" + std::string(field) + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

LossPivot pivot_losses(const std::vector<ResultRow>& rows, const std::string& metric) {
    struct CellTotal {
        double total = 0.0;
        std::size_t count = 0;
        bool unusable = false;
    };
    std::map<std::pair<std::string, std::string>, CellTotal> cells;
    std::set<std::tuple<std::string, std::string, std::int64_t>> seen;
    std::set<std::string> strategy_names;
    std::set<std::string> dataset_names;

    for (const ResultRow& row : rows) {
        if (row.metric != metric) {
            continue;
        }
        if (!seen.emplace(row.dataset, row.strategy, row.fold).second) {
            throw InvalidParameter("duplicate result row for " + row.dataset + "/" +
                                   row.strategy + "/fold " + std::to_string(row.fold));
        }
        CellTotal& cell = cells[{row.dataset, row.strategy}];
        if (std::isnan(row.value)) {
            cell.unusable = true;
        } else {
            cell.total += row.value;
        }
        cell.count += 1;
        strategy_names.insert(row.strategy);
        dataset_names.insert(row.dataset);
    }
    if (cells.empty()) {
        throw EmptyInput("no rows for metric '" + metric + "'");
    }

    LossPivot pivot;
    pivot.strategies.assign(strategy_names.begin(), strategy_names.end());

    std::vector<std::string> kept;
    for (const std::string& dataset : dataset_names) {
        bool usable = true;
        for (const std::string& strategy : pivot.strategies) {
            const auto found = cells.find({dataset, strategy});
            if (found == cells.end()) {
                throw IncompletePivot("no result for dataset '" + dataset +
                                      "', strategy '" + strategy + "'");
            }
            usable = usable && !found->second.unusable;
        }
        if (usable) {
            kept.push_back(dataset);
        } else {
            pivot.dropped.push_back(dataset);
        }
    }
    if (kept.empty()) {
        throw IncompletePivot("every dataset has unusable values for metric '" + metric +
                              "'");
    }
    pivot.datasets = std::move(kept);

    pivot.losses = Matrix(pivot.strategies.size(), pivot.datasets.size());
    for (std::size_t i = 0; i < pivot.strategies.size(); ++i) {
        for (std::size_t j = 0; j < pivot.datasets.size(); ++j) {
            const CellTotal& cell = cells.at({pivot.datasets[j], pivot.strategies[i]});
            const double mean = cell.total / static_cast<double>(cell.count);
            pivot.losses.at(i, j) = metric == "accuracy" ? 1.0 - mean : mean;
        }
    }
    return pivot;
}

}  // namespace tsml::bench
