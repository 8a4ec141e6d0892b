#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsml/bench/dataset.hpp"
#include "tsml/bench/experiments.hpp"
#include "tsml/bench/metrics.hpp"
#include "tsml/bench/stats.hpp"
#include "tsml/errors.hpp"
#include "tsml/forecast/naive.hpp"
#include "tsml/forecast/poly.hpp"
#include "tsml/forecast/reduction.hpp"
#include "tsml/forecast/smoothing.hpp"
#include "tsml/horizon.hpp"
#include "tsml/tabular/forest.hpp"
#include "tsml/tabular/knn.hpp"
#include "tsml/tabular/linear.hpp"
#include "tsml/time_series.hpp"
#include "tsml/util.hpp"

namespace {

using namespace tsml;

/// Unreadable input file; maps to the data-error exit code.
struct FileError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError("cannot read file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        throw Error("cannot write file '" + path + "'");
    }
}

bench::DatasetFile load_dataset(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return bench::parse_dataset(text);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), "'" + path + "': " + e.reason());
    }
}

/// Literal coercion for --param overrides: integer, then real, then boolean,
/// otherwise the raw string.
ParamValue coerce_value(const std::string& text) {
    {
        std::int64_t number = 0;
        const char* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, number);
        if (ec == std::errc{} && ptr == end) {
            return number;
        }
    }
    {
        double number = 0.0;
        const char* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, number);
        if (ec == std::errc{} && ptr == end) {
            return number;
        }
    }
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    return text;
}

ParamMap parse_param_args(const std::vector<std::string>& args) {
    ParamMap params;
    for (const std::string& arg : args) {
        const std::size_t split = arg.find('=');
        if (split == std::string::npos || split == 0) {
            throw ConfigError("--param expects name=value, got '" + arg + "'");
        }
        params[arg.substr(0, split)] = coerce_value(arg.substr(split + 1));
    }
    return params;
}

struct ClassifyOptions {
    std::string train_path;
    std::string test_path;
    std::string strategy;
    std::uint64_t seed = 0;
    std::string out_path;
    std::vector<std::string> param_args;
};

int run_classify(const ClassifyOptions& options) {
    const bench::DatasetFile train = load_dataset(options.train_path);
    const bench::DatasetFile test = load_dataset(options.test_path);

    const bench::StrategySpec spec{options.strategy, parse_param_args(options.param_args)};
    std::unique_ptr<classify::TimeSeriesClassifier> model =
        bench::strategy_for_panel(spec, train.panel);
    bench::seed_if_supported(*model, options.seed);

    model->fit(train.panel, train.labels);
    const std::vector<std::string> predicted = model->predict(test.panel);
    const double value = bench::accuracy(test.labels, predicted);
    std::cout << "accuracy " << format_double(value) << "\n";

    if (!options.out_path.empty()) {
        const std::vector<bench::ResultRow> rows = {
            {test.name, options.strategy, 0, "accuracy", value}};
        write_file(options.out_path, bench::serialize_results(rows));
    }
    return 0;
}

struct ForecastOptions {
    std::string input_path;
    std::int64_t fh = 1;
    std::string strategy;
    std::int64_t window_length = 10;
    std::string method = "recursive";
    std::string regressor = "ols";
};

TimeSeries read_series_csv(const std::string& text) {
    std::vector<TimePoint> points;
    std::vector<double> values;

    std::size_t begin = 0;
    std::size_t number = 1;
    bool saw_header = false;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string_view line(text.data() + begin, end - begin);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!saw_header) {
            if (line != "time,value") {
                throw ParseError(1, 1, "expected header time,value");
            }
            saw_header = true;
        } else if (!line.empty()) {
            const std::size_t comma = line.find(',');
            if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
                throw ParseError(number, 1, "expected 2 fields");
            }
            const std::string_view time_field = line.substr(0, comma);
            const std::string_view value_field = line.substr(comma + 1);

            TimePoint t = 0;
            const char* time_end = time_field.data() + time_field.size();
            const auto [tp, tec] = std::from_chars(time_field.data(), time_end, t);
            if (tec != std::errc{} || tp != time_end) {
                throw ParseError(number, 1, "not a time point: '" + std::string(time_field) + "'");
            }
            double v = 0.0;
            const char* value_end = value_field.data() + value_field.size();
            const auto [vp, vec] = std::from_chars(value_field.data(), value_end, v);
            if (vec != std::errc{} || vp != value_end) {
                throw ParseError(number, comma + 2,
                                 "not a value: '" + std::string(value_field) + "'");
            }
            points.push_back(t);
            values.push_back(v);
        }
        ++number;
        if (end == text.size()) {
            break;
        }
        begin = end + 1;
    }
    if (points.empty()) {
        throw ParseError(number, 1, "no observations");
    }
    return TimeSeries(TimeIndex(std::move(points)), std::move(values));
}

std::unique_ptr<tabular::Regressor> make_regressor(const std::string& name) {
    if (name == "ols") {
        return std::make_unique<tabular::OlsRegressor>();
    }
    if (name == "knn") {
        return std::make_unique<tabular::KnnRegressor>();
    }
    if (name == "forest") {
        return std::make_unique<tabular::ForestRegressor>();
    }
    throw ConfigError("unknown regressor '" + name + "' (available: ols, knn, forest)");
}

std::unique_ptr<forecast::Forecaster> make_forecaster(const ForecastOptions& options) {
    if (options.strategy == "naive") {
        return std::make_unique<forecast::NaiveForecaster>("last");
    }
    if (options.strategy == "ses") {
        return std::make_unique<forecast::ExpSmoothingForecaster>(false);
    }
    if (options.strategy == "holt") {
        return std::make_unique<forecast::ExpSmoothingForecaster>(true);
    }
    if (options.strategy == "poly") {
        return std::make_unique<forecast::PolyTrendForecaster>(1);
    }
    if (options.strategy == "reduced") {
        return std::make_unique<forecast::ReducedRegressionForecaster>(
            make_regressor(options.regressor), options.window_length, options.method);
    }
    throw ConfigError("unknown strategy '" + options.strategy +
                      "' (available: naive, ses, holt, poly, reduced)");
}

int run_forecast(const ForecastOptions& options) {
    const TimeSeries y = read_series_csv(read_file(options.input_path));

    std::vector<std::int64_t> steps(static_cast<std::size_t>(options.fh));
    for (std::size_t i = 0; i < steps.size(); ++i) {
        steps[i] = static_cast<std::int64_t>(i) + 1;
    }
    const ForecastingHorizon fh = ForecastingHorizon::relative(std::move(steps));

    std::unique_ptr<forecast::Forecaster> model = make_forecaster(options);
    model->fit(y, fh);
    const TimeSeries forecast = model->predict(fh);

    std::cout << "time,value\n";
    for (std::size_t i = 0; i < forecast.size(); ++i) {
        std::cout << forecast.time_at(i) << "," << format_double(forecast.values()[i])
                  << "\n";
    }
    return 0;
}

ParamMap params_from_json(const nlohmann::json& object, const std::string& where) {
    ParamMap params;
    for (const auto& [key, value] : object.items()) {
        if (value.is_boolean()) {
            params[key] = value.get<bool>();
        } else if (value.is_number_integer() || value.is_number_unsigned()) {
            params[key] = value.get<std::int64_t>();
        } else if (value.is_number_float()) {
            params[key] = value.get<double>();
        } else if (value.is_string()) {
            params[key] = value.get<std::string>();
        } else {
            throw ConfigError(where + ": parameter '" + key +
                              "' must be a boolean, number, or string");
        }
    }
    return params;
}

struct BenchConfig {
    bench::ExperimentPlan plan;
    std::string out_path = "results.csv";
};

BenchConfig load_bench_config(const std::string& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const FileError& e) {
        throw ConfigError(e.what());
    }

    nlohmann::json config;
    try {
        config = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    if (!config.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    const std::set<std::string> known = {"datasets", "strategies", "folds",
                                         "metrics",  "seed",       "out"};
    for (const auto& [key, unused] : config.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    if (!config.contains("datasets") || !config["datasets"].is_array()) {
        throw ConfigError("config needs a \"datasets\" array of file paths");
    }
    if (!config.contains("strategies") || !config["strategies"].is_array()) {
        throw ConfigError("config needs a \"strategies\" array");
    }

    BenchConfig out;
    for (const nlohmann::json& entry : config["datasets"]) {
        if (!entry.is_string()) {
            throw ConfigError("dataset entries must be file paths");
        }
        const std::string dataset_path = entry.get<std::string>();
        try {
            out.plan.datasets.push_back(load_dataset(dataset_path));
        } catch (const FileError&) {
            throw ConfigError("cannot read dataset file '" + dataset_path + "'");
        }
    }
    for (const nlohmann::json& entry : config["strategies"]) {
        if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string()) {
            throw ConfigError("strategy entries must be objects with a \"name\"");
        }
        bench::StrategySpec spec;
        spec.name = entry["name"].get<std::string>();
        for (const auto& [key, value] : entry.items()) {
            if (key == "name") {
                continue;
            }
            if (key != "params") {
                throw ConfigError("strategy '" + spec.name + "': unknown key '" + key + "'");
            }
            if (!value.is_object()) {
                throw ConfigError("strategy '" + spec.name + "': params must be an object");
            }
            spec.params = params_from_json(value, "strategy '" + spec.name + "'");
        }
        out.plan.strategies.push_back(std::move(spec));
    }
    if (config.contains("folds")) {
        if (!config["folds"].is_number_integer() && !config["folds"].is_number_unsigned()) {
            throw ConfigError("\"folds\" must be an integer");
        }
        out.plan.folds = config["folds"].get<std::int64_t>();
    }
    if (config.contains("metrics")) {
        if (!config["metrics"].is_array()) {
            throw ConfigError("\"metrics\" must be an array of metric names");
        }
        out.plan.metrics.clear();
        for (const nlohmann::json& entry : config["metrics"]) {
            if (!entry.is_string()) {
                throw ConfigError("metric entries must be strings");
            }
            out.plan.metrics.push_back(entry.get<std::string>());
        }
    }
    if (config.contains("seed")) {
        if (!config["seed"].is_number_unsigned() &&
            !(config["seed"].is_number_integer() && config["seed"].get<std::int64_t>() >= 0)) {
            throw ConfigError("\"seed\" must be a non-negative integer");
        }
        out.plan.seed = config["seed"].get<std::uint64_t>();
    }
    if (config.contains("out")) {
        if (!config["out"].is_string()) {
            throw ConfigError("\"out\" must be a file path");
        }
        out.out_path = config["out"].get<std::string>();
    }
    return out;
}

int run_bench(const std::string& config_path) {
    const BenchConfig config = load_bench_config(config_path);
    const bench::ExperimentResult result = bench::run_experiments(config.plan);

    write_file(config.out_path, bench::serialize_results(result.rows));
    for (const std::string& failure : result.failures) {
        std::cerr << "warning: " << failure << "\n";
    }
    std::cout << "wrote " << config.out_path << ": " << result.rows.size() << " rows";
    if (!result.failures.empty()) {
        std::cout << ", " << result.failures.size() << " failed items";
    }
    std::cout << "\n";
    return 0;
}

struct CompareOptions {
    std::string results_path;
    std::string test = "friedman";
};

int run_compare(const CompareOptions& options) {
    const std::vector<bench::ResultRow> rows =
        bench::parse_results(read_file(options.results_path));
    if (rows.empty()) {
        throw EmptyInput("the results file has no rows");
    }

    std::set<std::string> metrics;
    for (const bench::ResultRow& row : rows) {
        metrics.insert(row.metric);
    }

    for (const std::string& metric : metrics) {
        std::cout << "metric " << metric << "\n";
        bench::LossPivot pivot;
        try {
            pivot = bench::pivot_losses(rows, metric);
        } catch (const Error& e) {
            std::cout << "note " << e.what() << "\n";
            continue;
        }

        const std::vector<double> ranks = bench::mean_ranks(pivot.losses);
        for (std::size_t i = 0; i < pivot.strategies.size(); ++i) {
            std::cout << "mean-rank " << pivot.strategies[i] << " " << format_double(ranks[i])
                      << "\n";
        }
        for (const std::string& dataset : pivot.dropped) {
            std::cout << "dropped " << dataset << "\n";
        }

        if (options.test == "friedman") {
            try {
                const double statistic = bench::friedman_statistic(pivot.losses);
                std::cout << "friedman " << format_double(statistic) << "\n";
            } catch (const Error& e) {
                std::cout << "note " << e.what() << "\n";
            }
        } else {
            const std::size_t n_datasets = pivot.datasets.size();
            std::vector<std::vector<double>> losses(pivot.strategies.size(),
                                                    std::vector<double>(n_datasets));
            for (std::size_t i = 0; i < pivot.strategies.size(); ++i) {
                for (std::size_t j = 0; j < n_datasets; ++j) {
                    losses[i][j] = pivot.losses.at(i, j);
                }
            }
            for (std::size_t i = 0; i < pivot.strategies.size(); ++i) {
                for (std::size_t j = i + 1; j < pivot.strategies.size(); ++j) {
                    try {
                        const double p = bench::sign_test_p(losses[i], losses[j]);
                        std::cout << "sign " << pivot.strategies[i] << " "
                                  << pivot.strategies[j] << " " << format_double(p) << "\n";
                    } catch (const Error& e) {
                        std::cout << "note " << e.what() << "\n";
                    }
                }
            }
        }
    }
    return 0;
}

template <typename Body>
int run_guarded(const Body& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonFiniteValue& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnequalSpacing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SeriesTooShort& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TooFewRows& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UnknownParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const TypeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidK& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time series classification and forecasting workbench"};
    app.require_subcommand(1);

    ClassifyOptions classify_options;
    CLI::App* classify = app.add_subcommand("classify", "train on one dataset file, score another");
    classify->add_option("--train", classify_options.train_path, "training dataset file")
        ->required();
    classify->add_option("--test", classify_options.test_path, "evaluation dataset file")
        ->required();
    classify
        ->add_option("--strategy", classify_options.strategy, "tsf, knn-dtw, or knn-euclid")
        ->required();
    classify->add_option("--seed", classify_options.seed, "random seed (default 0)");
    classify->add_option("--out", classify_options.out_path, "also write a results CSV here");
    classify->add_option("--param", classify_options.param_args,
                         "hyper-parameter override name=value (repeatable)");

    ForecastOptions forecast_options;
    CLI::App* forecast = app.add_subcommand("forecast", "fit a forecaster on a time,value CSV");
    forecast->add_option("--input", forecast_options.input_path, "CSV with header time,value")
        ->required();
    forecast->add_option("--fh", forecast_options.fh, "forecasting horizon length")
        ->required()
        ->check(CLI::PositiveNumber);
    forecast
        ->add_option("--strategy", forecast_options.strategy,
                     "naive, ses, holt, poly, or reduced")
        ->required();
    forecast->add_option("--window-length", forecast_options.window_length,
                         "lag window for --strategy reduced (default 10)");
    forecast->add_option("--method", forecast_options.method, "recursive or direct")
        ->check(CLI::IsMember({"recursive", "direct"}));
    forecast->add_option("--regressor", forecast_options.regressor, "ols, knn, or forest")
        ->check(CLI::IsMember({"ols", "knn", "forest"}));

    std::string bench_config_path;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark described by a JSON config");
    bench_cmd->add_option("--config", bench_config_path, "JSON experiment description")
        ->required();

    CompareOptions compare_options;
    CLI::App* compare = app.add_subcommand("compare", "rank strategies from a results CSV");
    compare->add_option("--results", compare_options.results_path, "results CSV path")
        ->required();
    compare->add_option("--test", compare_options.test, "friedman or sign")
        ->check(CLI::IsMember({"friedman", "sign"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (classify->parsed()) {
        return run_guarded([&] { return run_classify(classify_options); });
    }
    if (forecast->parsed()) {
        return run_guarded([&] { return run_forecast(forecast_options); });
    }
    if (bench_cmd->parsed()) {
        return run_guarded([&] { return run_bench(bench_config_path); });
    }
    return run_guarded([&] { return run_compare(compare_options); });
}
