#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tsml/bench/dataset.hpp"
#include "tsml/bench/experiments.hpp"
#include "tsml/bench/metrics.hpp"
#include "tsml/bench/stats.hpp"
#include "tsml/classify/knn.hpp"
#include "tsml/classify/tsf.hpp"
#include "tsml/errors.hpp"
#include "tsml/matrix.hpp"
#include "tsml/panel.hpp"
#include "tsml/rng.hpp"
#include "tsml/time_series.hpp"
#include "tsml/util.hpp"

using namespace tsml;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> vec(std::initializer_list<double> values) { return values; }

Matrix table(std::size_t rows, std::size_t cols, std::initializer_list<double> values) {
    Matrix m(rows, cols);
    std::size_t index = 0;
    for (double v : values) {
        m.at(index / cols, index % cols) = v;
        ++index;
    }
    REQUIRE(index == rows * cols);
    return m;
}

/// Two-class univariate toy problem: noisy ramps up vs down.
bench::DatasetFile ramp_dataset(const std::string& name, std::size_t per_class,
                                std::uint64_t seed) {
    Rng rng(seed);
    std::vector<TimeSeries> series;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < per_class; ++i) {
        std::vector<double> up;
        std::vector<double> down;
        for (std::size_t t = 0; t < 6; ++t) {
            up.push_back(static_cast<double>(t) + 0.1 * rng.normal());
            down.push_back(5.0 - static_cast<double>(t) + 0.1 * rng.normal());
        }
        series.push_back(TimeSeries::from_values(std::move(up)));
        labels.emplace_back("up");
        series.push_back(TimeSeries::from_values(std::move(down)));
        labels.emplace_back("down");
    }
    return bench::DatasetFile{name,
                              true,
                              {"up", "down"},
                              Panel::of_series("dim_0", std::move(series)),
                              std::move(labels)};
}

void check_dataset_equal(const bench::DatasetFile& a, const bench::DatasetFile& b) {
    CHECK(a.name == b.name);
    CHECK(a.univariate == b.univariate);
    CHECK(a.class_labels == b.class_labels);
    CHECK(a.labels == b.labels);
    CHECK(a.panel == b.panel);
}

const char* kTinyFile =
    "@problemName tiny\n"
    "@univariate true\n"
    "@data\n"
    "1,2:a\n"
    "3,4:b\n";

}  // namespace

TEST_CASE("smape matches hand values") {
    CHECK(bench::smape(vec({100.0}), vec({50.0})) ==
          doctest::Approx(200.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(bench::smape(vec({100.0}), vec({50.0})) - 66.666666666666666) < 1e-9);
    CHECK(bench::smape(vec({1.0, 2.0, 3.0}), vec({1.0, 2.0, 3.0})) == 0.0);
    CHECK(bench::smape(vec({0.0}), vec({0.0})) == 0.0);  // 0/0 term defined as 0
    CHECK(bench::smape(vec({1.0}), vec({-1.0})) == 200.0);
    CHECK(bench::smape(vec({0.0, 0.0}), vec({0.0, 1.0})) == 100.0);
}

TEST_CASE("smape stays within its scale on random inputs") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
        std::vector<double> actual;
        std::vector<double> predicted;
        for (std::size_t i = 0; i < n; ++i) {
            actual.push_back(rng.uniform_real() * 20.0 - 10.0);
            predicted.push_back(rng.uniform_real() * 20.0 - 10.0);
        }
        const double value = bench::smape(actual, predicted);
        CHECK(value >= 0.0);
        CHECK(value <= 200.0);
    }
}

TEST_CASE("smape validates input shapes") {
    CHECK_THROWS_AS(bench::smape(vec({1.0}), vec({1.0, 2.0})), LengthMismatch);
    CHECK_THROWS_AS(bench::smape(vec({}), vec({})), EmptyInput);
}

TEST_CASE("mase matches the hand example") {
    // train [1,2,3] has mean one-step naive error 1; |error| = 1 -> exactly 1
    CHECK(bench::mase(vec({5.0}), vec({4.0}), vec({1.0, 2.0, 3.0})) == 1.0);
    CHECK(bench::mase(vec({5.0}), vec({5.0}), vec({1.0, 2.0, 3.0})) == 0.0);
    // doubling the naive scale halves the score
    CHECK(bench::mase(vec({5.0}), vec({4.0}), vec({1.0, 3.0, 5.0})) == 0.5);
}

TEST_CASE("mase validates the training series") {
    CHECK_THROWS_AS(bench::mase(vec({1.0}), vec({1.0}), vec({1.0})), SeriesTooShort);
    CHECK_THROWS_AS(bench::mase(vec({1.0}), vec({1.0}), vec({2.0, 2.0, 2.0})),
                    ZeroDenominator);
    CHECK_THROWS_AS(bench::mase(vec({1.0, 2.0}), vec({1.0}), vec({1.0, 2.0})),
                    LengthMismatch);
}

TEST_CASE("rmse matches hand values") {
    CHECK(bench::rmse(vec({0.0, 0.0}), vec({3.0, 4.0})) ==
          doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));
    CHECK(bench::rmse(vec({7.0}), vec({7.0})) == 0.0);
    CHECK_THROWS_AS(bench::rmse(vec({1.0}), vec({})), LengthMismatch);
}

TEST_CASE("accuracy counts matching labels") {
    CHECK(bench::accuracy({"a", "b", "a", "b"}, {"a", "b", "b", "b"}) == 0.75);
    CHECK(bench::accuracy({"a"}, {"a"}) == 1.0);
    CHECK(bench::accuracy({"a"}, {"b"}) == 0.0);
    CHECK_THROWS_AS(bench::accuracy({"a"}, {"a", "b"}), LengthMismatch);
    CHECK_THROWS_AS(bench::accuracy({}, {}), EmptyInput);
}

TEST_CASE("average ranks give rank 1 to the smallest and split ties") {
    CHECK(bench::average_ranks(vec({3.0, 1.0, 2.0})) == vec({3.0, 1.0, 2.0}));
    CHECK(bench::average_ranks(vec({1.0, 1.0, 2.0})) == vec({1.5, 1.5, 3.0}));
    CHECK(bench::average_ranks(vec({5.0, 5.0, 5.0, 5.0})) == vec({2.5, 2.5, 2.5, 2.5}));
    CHECK_THROWS_AS(bench::average_ranks(vec({})), EmptyInput);
    CHECK_THROWS_AS(bench::average_ranks(vec({1.0, kNaN})), NonFiniteValue);
}

TEST_CASE("mean ranks average per-dataset rankings") {
    // losses: strategy x dataset
    const Matrix losses = table(2, 2, {1.0, 4.0, 2.0, 3.0});
    CHECK(bench::mean_ranks(losses) == vec({1.5, 1.5}));
    const Matrix dominated = table(2, 3, {1.0, 1.0, 1.0, 2.0, 2.0, 2.0});
    CHECK(bench::mean_ranks(dominated) == vec({1.0, 2.0}));
}

TEST_CASE("friedman statistic matches the dominance table by hand") {
    // 3 strategies, 4 datasets, strict order everywhere -> ranks (1,2,3)
    const Matrix losses = table(3, 4,
                                {1.0, 1.0, 1.0, 1.0,
                                 2.0, 2.0, 2.0, 2.0,
                                 3.0, 3.0, 3.0, 3.0});
    CHECK(bench::friedman_statistic(losses) == 8.0);
}

TEST_CASE("friedman statistic is zero when nothing differs") {
    const Matrix losses = table(3, 2, {1.0, 2.0, 1.0, 2.0, 1.0, 2.0});
    CHECK(bench::friedman_statistic(losses) == 0.0);
}

TEST_CASE("friedman statistic ignores row order and per-dataset shifts") {
    Rng rng(23);
    Matrix losses(4, 5);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            losses.at(i, j) = rng.uniform_real();
        }
    }
    const double base = bench::friedman_statistic(losses);

    Matrix permuted(4, 5);
    const std::size_t order[4] = {2, 0, 3, 1};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            permuted.at(i, j) = losses.at(order[i], j);
        }
    }
    CHECK(bench::friedman_statistic(permuted) == doctest::Approx(base).epsilon(1e-12));

    Matrix shifted = losses;
    for (std::size_t i = 0; i < 4; ++i) {
        shifted.at(i, 2) += 17.5;  // ranks within a dataset are shift-invariant
    }
    CHECK(bench::friedman_statistic(shifted) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("friedman statistic needs at least 2 strategies and 2 datasets") {
    CHECK_THROWS_AS(bench::friedman_statistic(table(1, 3, {1.0, 2.0, 3.0})),
                    InvalidParameter);
    CHECK_THROWS_AS(bench::friedman_statistic(table(3, 1, {1.0, 2.0, 3.0})),
                    InvalidParameter);
}

TEST_CASE("sign test matches the binomial tail by hand") {
    // a wins on all 5 datasets: p = 2 * (1/2)^5
    CHECK(bench::sign_test_p(vec({0, 0, 0, 0, 0}), vec({1, 1, 1, 1, 1})) == 0.0625);
    // symmetric in argument order
    CHECK(bench::sign_test_p(vec({1, 1, 1, 1, 1}), vec({0, 0, 0, 0, 0})) == 0.0625);
    // one win each: p capped at 1
    CHECK(bench::sign_test_p(vec({0.0, 2.0}), vec({1.0, 1.0})) == 1.0);
    // 3 wins vs 2: tail = (1+5+10)/32 = 0.5 -> p = 1
    CHECK(bench::sign_test_p(vec({0, 0, 0, 1, 1}), vec({1, 1, 1, 0, 0})) == 1.0);
    // 4 wins vs 1: tail = (1+5)/32 -> p = 0.375
    CHECK(bench::sign_test_p(vec({0, 0, 0, 0, 1}), vec({1, 1, 1, 1, 0})) == 0.375);
}

TEST_CASE("sign test drops ties and rejects degenerate input") {
    // two ties dropped, one decisive win -> p = 2 * min(1/2, 1/2) = 1
    CHECK(bench::sign_test_p(vec({1.0, 2.0, 0.0}), vec({1.0, 2.0, 1.0})) == 1.0);
    CHECK_THROWS_AS(bench::sign_test_p(vec({1.0, 2.0}), vec({1.0, 2.0})), AllTies);
    CHECK_THROWS_AS(bench::sign_test_p(vec({1.0}), vec({1.0, 2.0})), LengthMismatch);
    CHECK_THROWS_AS(bench::sign_test_p(vec({}), vec({})), EmptyInput);
    CHECK_THROWS_AS(bench::sign_test_p(vec({kNaN}), vec({1.0})), NonFiniteValue);
}

TEST_CASE("dataset parser reads the minimal univariate file") {
    const bench::DatasetFile file = bench::parse_dataset(kTinyFile);
    CHECK(file.name == "tiny");
    CHECK(file.univariate);
    CHECK(file.class_labels.empty());
    CHECK(file.labels == std::vector<std::string>{"a", "b"});
    REQUIRE(file.panel.n_instances() == 2);
    REQUIRE(file.panel.n_columns() == 1);
    CHECK(file.panel.column_names()[0] == "dim_0");
    CHECK(file.panel.cell(0, 0).series().values() == vec({1.0, 2.0}));
    CHECK(file.panel.cell(1, 0).series().values() == vec({3.0, 4.0}));
    CHECK(file.panel.cell(0, 0).series().time_at(0) == 0);  // reindexed from 0
}

TEST_CASE("dataset parser handles dimensions, declared labels, and decoration") {
    const std::string text =
        "# produced by hand\r\n"
        "@problemName multi set\r\n"
        "\r\n"
        "@univariate false\r\n"
        "@classLabel true yes no\r\n"
        "@data\r\n"
        " 1 , 2 : 10,20,30 : yes \r\n"
        "# a comment between instances\r\n"
        "3:40:no\r\n";
    const bench::DatasetFile file = bench::parse_dataset(text);
    CHECK(file.name == "multi set");
    CHECK_FALSE(file.univariate);
    CHECK(file.class_labels == std::vector<std::string>{"yes", "no"});
    CHECK(file.labels == std::vector<std::string>{"yes", "no"});
    REQUIRE(file.panel.n_columns() == 2);
    CHECK(file.panel.cell(0, 0).series().values() == vec({1.0, 2.0}));
    CHECK(file.panel.cell(0, 1).series().values() == vec({10.0, 20.0, 30.0}));
    CHECK(file.panel.cell(1, 0).series().values() == vec({3.0}));
    CHECK(file.panel.cell(1, 1).series().values() == vec({40.0}));
}

TEST_CASE("dataset parser accepts scientific notation and negatives") {
    const bench::DatasetFile file = bench::parse_dataset(
        "@problemName sci\n@univariate true\n@data\n-1.5,2e3,1e-2:a\n");
    CHECK(file.panel.cell(0, 0).series().values() == vec({-1.5, 2000.0, 0.01}));
}

TEST_CASE("dataset parser reports exact error positions") {
    struct BadCase {
        const char* text;
        std::size_t line;
        std::size_t column;
        const char* reason;
    };
    const BadCase cases[] = {
        {"", 1, 1, "missing @problemName header"},
        {"# only comments\n\n", 3, 1, "missing @problemName header"},
        {"@univariate true\n@data\n1:a\n", 1, 1, "expected @problemName"},
        {"  @problemName\n", 1, 15, "missing dataset name"},
        {"@problemName x\n", 2, 1, "missing @univariate header"},
        {"@problemName x\n@data\n1:a\n", 2, 1, "expected @univariate"},
        {"@problemName x\n@univariate yes\n", 2, 13, "@univariate takes true or false"},
        {"@problemName x\n@univariate true\n", 3, 1, "missing @data marker"},
        {"@problemName x\n@univariate true\n@attribute foo\n@data\n1:a\n", 3, 1,
         "expected @classLabel or @data, got '@attribute'"},
        {"@problemName x\n@univariate true\n@classLabel false a\n@data\n1:a\n", 3, 13,
         "@classLabel takes true"},
        {"@problemName x\n@univariate true\n@classLabel true\n@data\n1:a\n", 3, 13,
         "missing class labels"},
        {"@problemName x\n@univariate true\n@classLabel true a\n@classLabel true b\n"
         "@data\n1:a\n",
         4, 1, "duplicate @classLabel"},
        {"@problemName x\n@univariate true\n@data oops\n1:a\n", 3, 7,
         "unexpected text after @data"},
        {"@problemName x\n@univariate true\n@data\n", 4, 1, "no data lines"},
        {"@problemName x\n@univariate true\n@data\n1,2,3\n", 4, 1,
         "missing class label field"},
        {"@problemName x\n@univariate true\n@data\n1:2:a\n", 4, 1,
         "univariate data line has 2 dimensions"},
        {"@problemName x\n@univariate false\n@data\n1:2:a\n1:2:3:b\n", 5, 1,
         "expected 2 dimensions, got 3"},
        {"@problemName x\n@univariate true\n@data\n1,x:a\n", 4, 3, "not a number: 'x'"},
        {"@problemName x\n@univariate true\n@data\n1,,2:a\n", 4, 3, "empty value"},
        {"@problemName x\n@univariate true\n@data\ninf:a\n", 4, 1,
         "non-finite value: 'inf'"},
        {"@problemName x\n@univariate true\n@data\n1,2:  \n", 4, 7, "empty class label"},
        {"@problemName x\n@univariate true\n@classLabel true a b\n@data\n1:c\n", 5, 3,
         "label 'c' is not declared in @classLabel"},
    };
    for (const BadCase& bad : cases) {
        CAPTURE(bad.text);
        try {
            bench::parse_dataset(bad.text);
            FAIL("expected a ParseError for: " << bad.text);
        } catch (const ParseError& e) {
            CHECK(e.line() == bad.line);
            CHECK(e.column() == bad.column);
            CHECK(e.reason() == bad.reason);
        }
    }
}

TEST_CASE("dataset serializer writes the canonical form") {
    Panel panel = Panel::build(
        {{"dim_0",
          {Cell::series(TimeSeries::from_values({1.0, 2.5})),
           Cell::series(TimeSeries::from_values({3.0}))}},
         {"dim_1",
          {Cell::series(TimeSeries::from_values({-1.0})),
           Cell::series(TimeSeries::from_values({0.5, 4.0}))}}});
    const bench::DatasetFile file{"pair", false, {"a", "b"}, std::move(panel), {"a", "b"}};
    CHECK(bench::serialize_dataset(file) ==
          "@problemName pair\n"
          "@univariate false\n"
          "@classLabel true a b\n"
          "@data\n"
          "1,2.5:-1:a\n"
          "3:0.5,4:b\n");
}

TEST_CASE("dataset serializer rejects unwritable content") {
    bench::DatasetFile file = bench::parse_dataset(kTinyFile);

    bench::DatasetFile bad_name = file;
    bad_name.name = " padded ";
    CHECK_THROWS_AS(bench::serialize_dataset(bad_name), InvalidParameter);
    bad_name.name = "";
    CHECK_THROWS_AS(bench::serialize_dataset(bad_name), InvalidParameter);

    bench::DatasetFile bad_labels = file;
    bad_labels.labels = {"a"};
    CHECK_THROWS_AS(bench::serialize_dataset(bad_labels), LengthMismatch);
    bad_labels.labels = {"a", "has space"};
    CHECK_THROWS_AS(bench::serialize_dataset(bad_labels), InvalidParameter);
    bad_labels.labels = {"a", "has:colon"};
    CHECK_THROWS_AS(bench::serialize_dataset(bad_labels), InvalidParameter);

    bench::DatasetFile undeclared = file;
    undeclared.class_labels = {"a"};
    CHECK_THROWS_AS(bench::serialize_dataset(undeclared), InvalidParameter);

    bench::DatasetFile two_dims = file;
    two_dims.panel = Panel::build(
        {{"dim_0", {Cell::series(TimeSeries::from_values({1.0}))}},
         {"dim_1", {Cell::series(TimeSeries::from_values({2.0}))}}});
    two_dims.labels = {"a"};
    CHECK_THROWS_AS(bench::serialize_dataset(two_dims), InvalidParameter);

    bench::DatasetFile primitive = file;
    primitive.univariate = false;
    primitive.panel = Panel::build({{"dim_0", {Cell::numeric(1.0)}}});
    primitive.labels = {"a"};
    CHECK_THROWS_AS(bench::serialize_dataset(primitive), NotASeriesColumn);
}

TEST_CASE("fuzzed dataset files survive a serialize and parse round trip") {
    const std::vector<std::string> pool = {"alpha", "beta", "gamma", "x1"};
    Rng rng(97);
    for (int trial = 0; trial < 50; ++trial) {
        const bool univariate = rng.uniform_int(0, 1) == 1;
        const std::size_t dims =
            univariate ? 1 : static_cast<std::size_t>(rng.uniform_int(2, 3));
        const std::size_t instances = static_cast<std::size_t>(rng.uniform_int(1, 5));
        const bool declared = rng.uniform_int(0, 1) == 1;

        std::vector<std::pair<std::string, std::vector<Cell>>> columns(dims);
        for (std::size_t k = 0; k < dims; ++k) {
            columns[k].first = "dim_" + std::to_string(k);
        }
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < instances; ++i) {
            for (std::size_t k = 0; k < dims; ++k) {
                std::vector<double> values;
                const std::size_t len = static_cast<std::size_t>(rng.uniform_int(1, 6));
                for (std::size_t t = 0; t < len; ++t) {
                    values.push_back(rng.uniform_int(0, 1) == 0
                                         ? static_cast<double>(rng.uniform_int(-50, 50))
                                         : rng.uniform_real() * 200.0 - 100.0);
                }
                columns[k].second.push_back(
                    Cell::series(TimeSeries::from_values(std::move(values))));
            }
            labels.push_back(pool[static_cast<std::size_t>(rng.uniform_int(0, 3))]);
        }
        const bench::DatasetFile file{"set_" + std::to_string(trial), univariate,
                                      declared ? pool : std::vector<std::string>{},
                                      Panel::build(std::move(columns)), std::move(labels)};

        CAPTURE(trial);
        const std::string text = bench::serialize_dataset(file);
        const bench::DatasetFile reread = bench::parse_dataset(text);
        check_dataset_equal(reread, file);
        CHECK(bench::serialize_dataset(reread) == text);
    }
}

TEST_CASE("resample splits are deterministic, disjoint, and sized") {
    const bench::Resample first = bench::resample_split(10, "ds", 0, 42);
    const bench::Resample again = bench::resample_split(10, "ds", 0, 42);
    CHECK(first.train == again.train);
    CHECK(first.test == again.test);
    CHECK(first.train.size() == 7);
    CHECK(first.test.size() == 3);
    CHECK(std::is_sorted(first.train.begin(), first.train.end()));
    CHECK(std::is_sorted(first.test.begin(), first.test.end()));

    std::set<std::size_t> all(first.train.begin(), first.train.end());
    all.insert(first.test.begin(), first.test.end());
    CHECK(all.size() == 10);
    CHECK(*all.rbegin() == 9);

    // about two thirds train, always leaving at least one test row
    CHECK(bench::resample_split(2, "ds", 0, 42).train.size() == 1);
    CHECK(bench::resample_split(3, "ds", 0, 42).train.size() == 2);
    CHECK(bench::resample_split(4, "ds", 0, 42).train.size() == 3);
    CHECK(bench::resample_split(6, "ds", 0, 42).train.size() == 4);

    // fold, dataset name, and seed all shift the permutation
    CHECK(bench::resample_split(10, "ds", 1, 42).train != first.train);
    CHECK(bench::resample_split(10, "other", 0, 42).train != first.train);
    CHECK(bench::resample_split(10, "ds", 0, 43).train != first.train);

    CHECK_THROWS_AS(bench::resample_split(1, "ds", 0, 42), TooFewRows);
    CHECK_THROWS_AS(bench::resample_split(10, "ds", -1, 42), InvalidParameter);
}

TEST_CASE("strategy registry builds classifiers and applies params") {
    const auto knn = bench::make_strategy("knn-dtw", {{"k", std::int64_t{2}}});
    CHECK(std::get<std::int64_t>(knn->get_params().at("k")) == 2);
    CHECK(bench::make_strategy("knn-euclid", {}) != nullptr);
    const auto tsf = bench::make_strategy("tsf", {{"n_trees", std::int64_t{7}}});
    CHECK(std::get<std::int64_t>(tsf->get_params().at("n_trees")) == 7);

    CHECK_THROWS_AS(bench::make_strategy("nope", {}), ConfigError);
    CHECK_THROWS_AS(bench::make_strategy("knn-dtw", {{"nope", std::int64_t{1}}}),
                    UnknownParameter);
}

TEST_CASE("strategies adapt to the panel's series columns") {
    const bench::StrategySpec spec{"knn-dtw", {{"k", std::int64_t{1}}}};

    const Panel single = Panel::of_series(
        "dim_0", {TimeSeries::from_values({1.0, 2.0}), TimeSeries::from_values({2.0, 1.0})});
    const auto direct = bench::strategy_for_panel(spec, single);
    CHECK(direct->get_params().contains("k"));

    const Panel both = Panel::build(
        {{"dim_0",
          {Cell::series(TimeSeries::from_values({1.0, 2.0})),
           Cell::series(TimeSeries::from_values({2.0, 1.0}))}},
         {"dim_1",
          {Cell::series(TimeSeries::from_values({5.0, 6.0})),
           Cell::series(TimeSeries::from_values({6.0, 5.0}))}}});
    const auto voted = bench::strategy_for_panel(spec, both);
    const ParamMap params = voted->get_params();
    CHECK(params.contains("dim_0__k"));
    CHECK(params.contains("dim_1__k"));

    voted->fit(both, {"lo", "hi"});
    CHECK(voted->predict(both) == std::vector<std::string>{"lo", "hi"});
}

TEST_CASE("seeding touches every nested seed parameter and nothing else") {
    classify::TimeSeriesForestClassifier forest(3);
    bench::seed_if_supported(forest, 1234);
    CHECK(std::get<std::int64_t>(forest.get_params().at("seed")) == 617);

    classify::TimeSeriesKnnClassifier knn(1);
    const ParamMap before = knn.get_params();
    bench::seed_if_supported(knn, 1234);  // no seed parameter: a no-op
    CHECK(knn.get_params() == before);

    const Panel both = Panel::build(
        {{"dim_0", {Cell::series(TimeSeries::from_values({1.0, 2.0}))}},
         {"dim_1", {Cell::series(TimeSeries::from_values({5.0, 6.0}))}}});
    const auto ensemble = bench::strategy_for_panel({"tsf", {}}, both);
    bench::seed_if_supported(*ensemble, 1234);
    CHECK(std::get<std::int64_t>(ensemble->get_params().at("dim_0__seed")) == 617);
    CHECK(std::get<std::int64_t>(ensemble->get_params().at("dim_1__seed")) == 617);
}

TEST_CASE("result rows compare field-wise with NaN treated as equal") {
    const bench::ResultRow row{"d", "s", 0, "accuracy", kNaN};
    CHECK(row == bench::ResultRow{"d", "s", 0, "accuracy", kNaN});
    CHECK_FALSE(row == bench::ResultRow{"d", "s", 0, "accuracy", 0.5});
    CHECK_FALSE(row == bench::ResultRow{"d", "s", 1, "accuracy", kNaN});

    CHECK(bench::row_before({"a", "z", 9, "z", 0}, {"b", "a", 0, "a", 0}));
    CHECK(bench::row_before({"a", "s", 0, "accuracy", 0}, {"a", "s", 1, "accuracy", 0}));
    CHECK(bench::row_before({"a", "s", 1, "accuracy", 0}, {"a", "s", 1, "error-rate", 0}));
}

TEST_CASE("one dataset, two strategies, one fold, two metrics give four rows") {
    bench::ExperimentPlan plan;
    plan.datasets = {ramp_dataset("ramps", 4, 5)};
    plan.strategies = {{"knn-dtw", {}}, {"knn-euclid", {}}};
    plan.folds = 1;
    plan.metrics = {"accuracy", "error-rate"};
    plan.seed = 9;

    const bench::ExperimentResult result = bench::run_experiments(plan);
    REQUIRE(result.rows.size() == 4);
    CHECK(result.failures.empty());
    CHECK(std::is_sorted(result.rows.begin(), result.rows.end(), bench::row_before));

    // the two metrics describe the same predictions
    CHECK(result.rows[0].metric == "accuracy");
    CHECK(result.rows[1].metric == "error-rate");
    CHECK(result.rows[0].value + result.rows[1].value == 1.0);
    CHECK(result.rows[2].value + result.rows[3].value == 1.0);
}

TEST_CASE("experiment rows match a by-hand rerun of the same item") {
    bench::ExperimentPlan plan;
    plan.datasets = {ramp_dataset("ramps", 5, 3)};
    plan.strategies = {{"knn-dtw", {}}};
    plan.folds = 2;
    plan.seed = 31;
    const bench::ExperimentResult result = bench::run_experiments(plan);
    REQUIRE(result.rows.size() == 2);

    const bench::DatasetFile& data = plan.datasets[0];
    for (const bench::ResultRow& row : result.rows) {
        const bench::Resample split =
            bench::resample_split(data.panel.n_instances(), data.name, row.fold, plan.seed);
        std::vector<std::string> train_labels;
        std::vector<std::string> test_labels;
        for (std::size_t i : split.train) {
            train_labels.push_back(data.labels[i]);
        }
        for (std::size_t i : split.test) {
            test_labels.push_back(data.labels[i]);
        }
        auto model = bench::make_strategy("knn-dtw", {});
        model->fit(slice_instances(data.panel, split.train), train_labels);
        const double expected =
            bench::accuracy(test_labels, model->predict(slice_instances(data.panel, split.test)));
        CHECK(row.value == expected);
    }
}

TEST_CASE("experiments are deterministic and independent of co-scheduled strategies") {
    bench::ExperimentPlan plan;
    plan.datasets = {ramp_dataset("one", 4, 7), ramp_dataset("two", 3, 8)};
    plan.strategies = {{"knn-dtw", {}}, {"tsf", {{"n_trees", std::int64_t{5}}}},
                       {"knn-euclid", {}}};
    plan.folds = 2;
    plan.seed = 77;

    const bench::ExperimentResult first = bench::run_experiments(plan);
    const bench::ExperimentResult second = bench::run_experiments(plan);
    REQUIRE(first.rows.size() == 12);
    CHECK(first.rows == second.rows);
    CHECK(bench::serialize_results(first.rows) == bench::serialize_results(second.rows));

    std::set<std::tuple<std::string, std::string, std::int64_t, std::string>> keys;
    for (const bench::ResultRow& row : first.rows) {
        CHECK(keys.emplace(row.dataset, row.strategy, row.fold, row.metric).second);
    }

    // dropping other strategies must not move knn-dtw's rows: folds are
    // derived from (dataset, fold, seed) alone
    bench::ExperimentPlan solo = plan;
    solo.strategies = {{"knn-dtw", {}}};
    const bench::ExperimentResult alone = bench::run_experiments(solo);
    std::vector<bench::ResultRow> from_full;
    for (const bench::ResultRow& row : first.rows) {
        if (row.strategy == "knn-dtw") {
            from_full.push_back(row);
        }
    }
    CHECK(alone.rows == from_full);
}

TEST_CASE("configuration problems stop the run before any work") {
    bench::ExperimentPlan plan;
    plan.datasets = {ramp_dataset("ramps", 3, 2)};
    plan.strategies = {{"knn-dtw", {}}};

    bench::ExperimentPlan bad = plan;
    bad.strategies = {{"mystery", {}}};
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);

    bad = plan;
    bad.strategies = {{"knn-dtw", {{"k", std::int64_t{0}}}}};
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);

    bad = plan;
    bad.strategies = {{"knn-dtw", {}}, {"knn-dtw", {}}};
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);

    bad = plan;
    bad.datasets.push_back(ramp_dataset("ramps", 2, 2));
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);

    bad = plan;
    bad.metrics = {"accuracy", "f1"};
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);

    bad = plan;
    bad.metrics = {"accuracy", "accuracy"};
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);

    bad = plan;
    bad.folds = 0;
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);

    bad = plan;
    bad.datasets.clear();
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);

    bad = plan;
    bad.strategies.clear();
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);

    bad = plan;
    bad.metrics.clear();
    CHECK_THROWS_AS(bench::run_experiments(bad), ConfigError);
}

TEST_CASE("a failing item degrades to NaN rows while the run continues") {
    bench::ExperimentPlan plan;
    // 3 instances -> train split of 2, so k=5 cannot be satisfied
    plan.datasets = {ramp_dataset("tiny", 2, 4), ramp_dataset("big", 6, 4)};
    plan.datasets[0].panel = slice_instances(plan.datasets[0].panel, {0, 1, 2});
    plan.datasets[0].labels.resize(3);
    plan.strategies = {{"knn-dtw", {{"k", std::int64_t{5}}}}};
    plan.metrics = {"accuracy", "error-rate"};
    plan.seed = 1;

    const bench::ExperimentResult result = bench::run_experiments(plan);
    REQUIRE(result.rows.size() == 4);
    REQUIRE(result.failures.size() == 1);
    CHECK(result.failures[0].find("tiny/knn-dtw/fold 0") == 0);

    std::size_t nan_rows = 0;
    for (const bench::ResultRow& row : result.rows) {
        if (std::isnan(row.value)) {
            CHECK(row.dataset == "tiny");
            ++nan_rows;
        } else {
            CHECK(row.dataset == "big");
        }
    }
    CHECK(nan_rows == 2);
}

TEST_CASE("multivariate datasets run through the per-dimension vote") {
    std::vector<Cell> dim0;
    std::vector<Cell> dim1;
    std::vector<std::string> labels;
    Rng rng(15);
    for (int i = 0; i < 8; ++i) {
        const double base = i % 2 == 0 ? 0.0 : 5.0;
        dim0.push_back(Cell::series(TimeSeries::from_values(
            {base + 0.1 * rng.normal(), base + 0.1 * rng.normal()})));
        dim1.push_back(Cell::series(TimeSeries::from_values(
            {-base + 0.1 * rng.normal(), -base + 0.1 * rng.normal()})));
        labels.push_back(i % 2 == 0 ? "lo" : "hi");
    }
    bench::DatasetFile file{
        "pairs", false, {},
        Panel::build({{"dim_0", std::move(dim0)}, {"dim_1", std::move(dim1)}}),
        std::move(labels)};

    bench::ExperimentPlan plan;
    plan.datasets = {std::move(file)};
    plan.strategies = {{"knn-euclid", {}}};
    plan.seed = 6;
    const bench::ExperimentResult result = bench::run_experiments(plan);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.failures.empty());
    CHECK(result.rows[0].value == 1.0);
}

TEST_CASE("results CSV round trips exactly, NaN rows included") {
    const std::vector<bench::ResultRow> rows = {
        {"ds2", "s1", 0, "accuracy", 0.125},
        {"ds1", "s2", 3, "error-rate", kNaN},
        {"ds1", "s1", 0, "accuracy", 2.0 / 3.0},
    };
    const std::string text = bench::serialize_results(rows);
    CHECK(text ==
          "dataset,strategy,fold,metric,value\n"
          "ds1,s1,0,accuracy,0.66666666666666663\n"
          "ds1,s2,3,error-rate,nan\n"
          "ds2,s1,0,accuracy,0.125\n");

    const std::vector<bench::ResultRow> reread = bench::parse_results(text);
    REQUIRE(reread.size() == 3);
    CHECK(reread[0] == rows[2]);
    CHECK(reread[1] == rows[1]);
    CHECK(reread[2] == rows[0]);
    CHECK(bench::serialize_results(reread) == text);
}

TEST_CASE("results serializer rejects fields the format cannot hold") {
    CHECK_THROWS_AS(bench::serialize_results({{"a,b", "s", 0, "m", 0.0}}), InvalidParameter);
    CHECK_THROWS_AS(bench::serialize_results({{"d", "s\n", 0, "m", 0.0}}), InvalidParameter);
    CHECK_THROWS_AS(bench::serialize_results({{"d", "", 0, "m", 0.0}}), InvalidParameter);
    CHECK_THROWS_AS(bench::serialize_results({{"d", "s", -1, "m", 0.0}}), InvalidParameter);
}

TEST_CASE("results parser pins down malformed lines") {
    try {
        bench::parse_results("dataset,strategy,fold,metric\nx\n");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 1);
    }
    try {
        bench::parse_results("dataset,strategy,fold,metric,value\na,b,c\n");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.reason() == "expected 5 fields, got 3");
    }
    try {
        bench::parse_results("dataset,strategy,fold,metric,value\na,b,x,m,1\n");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
        CHECK(e.reason() == "not a fold number: 'x'");
    }
    try {
        bench::parse_results("dataset,strategy,fold,metric,value\na,b,0,m,oops\n");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 9);
        CHECK(e.reason() == "not a metric value: 'oops'");
    }
}

TEST_CASE("loss pivot averages folds and orients every metric as a loss") {
    const std::vector<bench::ResultRow> rows = {
        {"ds1", "a", 0, "accuracy", 1.0},  {"ds1", "a", 1, "accuracy", 0.5},
        {"ds1", "b", 0, "accuracy", 0.5},  {"ds1", "b", 1, "accuracy", 0.5},
        {"ds2", "a", 0, "accuracy", 1.0},  {"ds2", "a", 1, "accuracy", 1.0},
        {"ds2", "b", 0, "accuracy", 0.0},  {"ds2", "b", 1, "accuracy", 0.0},
        {"ds1", "a", 0, "error-rate", 0.25}, {"ds1", "b", 0, "error-rate", 0.75},
    };
    const bench::LossPivot pivot = bench::pivot_losses(rows, "accuracy");
    CHECK(pivot.strategies == std::vector<std::string>{"a", "b"});
    CHECK(pivot.datasets == std::vector<std::string>{"ds1", "ds2"});
    CHECK(pivot.dropped.empty());
    CHECK(pivot.losses.at(0, 0) == 0.25);  // 1 - mean(1.0, 0.5)
    CHECK(pivot.losses.at(1, 0) == 0.5);
    CHECK(pivot.losses.at(0, 1) == 0.0);
    CHECK(pivot.losses.at(1, 1) == 1.0);

    // a non-accuracy metric is already a loss
    const bench::LossPivot errors = bench::pivot_losses(rows, "error-rate");
    CHECK(errors.losses.at(0, 0) == 0.25);
    CHECK(errors.losses.at(1, 0) == 0.75);
}

TEST_CASE("loss pivot drops NaN datasets and rejects holes") {
    const std::vector<bench::ResultRow> rows = {
        {"ds1", "a", 0, "accuracy", 1.0}, {"ds1", "b", 0, "accuracy", 0.5},
        {"ds2", "a", 0, "accuracy", kNaN}, {"ds2", "b", 0, "accuracy", 0.5},
    };
    const bench::LossPivot pivot = bench::pivot_losses(rows, "accuracy");
    CHECK(pivot.datasets == std::vector<std::string>{"ds1"});
    CHECK(pivot.dropped == std::vector<std::string>{"ds2"});

    CHECK_THROWS_AS(
        bench::pivot_losses({{"ds2", "a", 0, "accuracy", kNaN},
                             {"ds2", "b", 0, "accuracy", 0.5}},
                            "accuracy"),
        IncompletePivot);
    CHECK_THROWS_AS(
        bench::pivot_losses({{"ds1", "a", 0, "accuracy", 1.0},
                             {"ds2", "b", 0, "accuracy", 0.5}},
                            "accuracy"),
        IncompletePivot);
    CHECK_THROWS_AS(
        bench::pivot_losses({{"ds1", "a", 0, "accuracy", 1.0},
                             {"ds1", "a", 0, "accuracy", 0.5}},
                            "accuracy"),
        InvalidParameter);
    CHECK_THROWS_AS(bench::pivot_losses(rows, "rmse"), EmptyInput);
}

TEST_CASE("experiment results feed the pivot and the rank statistics") {
    bench::ExperimentPlan plan;
    plan.datasets = {ramp_dataset("one", 4, 21), ramp_dataset("two", 4, 22),
                     ramp_dataset("three", 4, 23)};
    plan.strategies = {{"knn-dtw", {}}, {"knn-euclid", {}}};
    plan.folds = 2;
    plan.seed = 12;

    const bench::ExperimentResult result = bench::run_experiments(plan);
    const std::vector<bench::ResultRow> reread =
        bench::parse_results(bench::serialize_results(result.rows));
    CHECK(reread == result.rows);

    const bench::LossPivot pivot = bench::pivot_losses(result.rows, "accuracy");
    CHECK(pivot.strategies == std::vector<std::string>{"knn-dtw", "knn-euclid"});
    REQUIRE(pivot.datasets.size() == 3);
    const std::vector<double> ranks = bench::mean_ranks(pivot.losses);
    CHECK(ranks.size() == 2);
    CHECK(ranks[0] + ranks[1] == 3.0);  // two strategies share ranks 1 and 2
    CHECK_NOTHROW(bench::friedman_statistic(pivot.losses));
}
