#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "experiments.hpp"
#include "tsml/classify/knn.hpp"
#include "tsml/classify/tsf.hpp"
#include "tsml/errors.hpp"
#include "tsml/panel.hpp"

using namespace tsml;
using namespace tsml::classify;

namespace {

TimeSeries series_of(std::vector<double> values) {
    return TimeSeries::from_values(std::move(values));
}

Panel one_series(std::vector<double> values) {
    return Panel::of_series("y", {series_of(std::move(values))});
}

}  // namespace

TEST_CASE("nearest neighbour recalls a memorized instance") {
    const Panel train = Panel::of_series(
        "y", {series_of({0, 0, 0}), series_of({5, 5, 5}), series_of({9, 9, 9})});
    TimeSeriesKnnClassifier knn(1);
    knn.fit(train, {"a", "b", "c"});
    CHECK(knn.classify(series_of({5, 5, 5})) == "b");
    CHECK(knn.predict(one_series({9, 9, 9})) == std::vector<std::string>{"c"});
}

TEST_CASE("warping 1-NN separates phase-shifted waves where euclidean fails") {
    const testing::ClassificationExperiment exp = testing::wave_experiment(2);

    TimeSeriesKnnClassifier warped(1, distance::DistanceSpec::dtw());
    warped.fit(exp.train, exp.train_labels);
    const double warped_accuracy = testing::accuracy_of(warped.predict(exp.test), exp.test_labels);

    TimeSeriesKnnClassifier flat(1, distance::DistanceSpec::euclidean());
    flat.fit(exp.train, exp.train_labels);
    const double flat_accuracy = testing::accuracy_of(flat.predict(exp.test), exp.test_labels);

    CHECK(warped_accuracy >= 0.95);
    CHECK(warped_accuracy > flat_accuracy);
}

TEST_CASE("nearest neighbour ties break to the lower index then the smaller label") {
    const Panel train = Panel::of_series("y", {series_of({0, 0}), series_of({2, 2})});
    TimeSeriesKnnClassifier knn(1, distance::DistanceSpec::euclidean());
    knn.fit(train, {"b", "a"});
    CHECK(knn.classify(series_of({1, 1})) == "b");

    knn.set_params({{"k", std::int64_t{2}}});
    knn.fit(train, {"b", "a"});
    CHECK(knn.classify(series_of({1, 1})) == "a");
}

TEST_CASE("time series knn validates its inputs") {
    const Panel train = Panel::of_series("y", {series_of({1, 2}), series_of({3, 4})});
    CHECK_THROWS_AS(TimeSeriesKnnClassifier(0), InvalidK);

    TimeSeriesKnnClassifier knn(3);
    CHECK_THROWS_AS(knn.fit(train, {"a", "b"}), InvalidK);

    TimeSeriesKnnClassifier ok(1);
    CHECK_THROWS_AS(ok.fit(train, {"a"}), LengthMismatch);
    CHECK_THROWS_AS(ok.classify(series_of({1, 2})), NotFitted);

    const Panel ragged = Panel::of_series("y", {series_of({1, 2}), series_of({3, 4, 5})});
    CHECK_THROWS_AS(ok.fit(ragged, {"a", "b"}), LengthMismatch);

    ok.fit(train, {"a", "b"});
    CHECK_THROWS_AS(ok.classify(series_of({1, 2, 3})), LengthMismatch);

    const Panel two_columns = Panel::build(
        {{"y", {Cell::series(series_of({1, 2}))}}, {"z", {Cell::series(series_of({1, 2}))}}});
    CHECK_THROWS_AS(ok.fit(two_columns, {"a"}), InvalidParameter);

    const Panel numeric = Panel::build({{"y", {Cell::numeric(1.0)}}});
    CHECK_THROWS_AS(ok.fit(numeric, {"a"}), NotASeriesColumn);
}

TEST_CASE("time series knn routes distance parameters") {
    TimeSeriesKnnClassifier knn(2, distance::DistanceSpec::wdtw(0.5));
    const ParamMap params = knn.get_params();
    CHECK(as_int(params.at("k"), "k") == 2);
    CHECK(as_string(params.at("distance"), "distance") == "wdtw");
    CHECK(as_double(params.at("band"), "band") == -1.0);
    CHECK(as_double(params.at("g"), "g") == 0.5);

    knn.set_params({{"distance", std::string{"dtw"}}, {"band", 0.25}});
    CHECK(as_string(knn.get_params().at("distance"), "distance") == "dtw");
    CHECK(as_double(knn.get_params().at("band"), "band") == 0.25);

    knn.set_params({{"band", -1.0}});
    CHECK(as_double(knn.get_params().at("band"), "band") == -1.0);

    CHECK_THROWS_AS(knn.set_params({{"k", std::int64_t{0}}}), InvalidK);
    CHECK_THROWS_AS(knn.set_params({{"band", 1.5}}), InvalidParameter);
    CHECK_THROWS_AS(knn.set_params({{"g", -2.0}}), InvalidParameter);
    CHECK_THROWS_AS(knn.set_params({{"distance", std::string{"hausdorff"}}}), InvalidParameter);

    std::unique_ptr<TimeSeriesKnnClassifier> clone = clone_as(knn);
    CHECK(clone->get_params() == knn.get_params());
    CHECK_FALSE(clone->is_fitted());
}

TEST_CASE("interval forest separates levels with a forced whole-series interval") {
    const Panel train = Panel::of_series(
        "y", {series_of({0, 0, 0}), series_of({5, 5, 5}), series_of({0.1, -0.1, 0}),
              series_of({5.1, 4.9, 5})});
    TimeSeriesForestClassifier tsf(1, 3);
    tsf.fit(train, {"low", "high", "low", "high"});

    CHECK(tsf.predict(train) == std::vector<std::string>{"low", "high", "low", "high"});
    for (const transform::Interval& iv : tsf.intervals_of(0)) {
        CHECK(iv == transform::Interval{0, 3});
    }
}

TEST_CASE("interval forest reaches high accuracy on level-shifted noise") {
    const testing::ClassificationExperiment exp = testing::level_shift_experiment(1);
    TimeSeriesForestClassifier tsf(100, 1);
    tsf.fit(exp.train, exp.train_labels);
    const double accuracy = testing::accuracy_of(tsf.predict(exp.test), exp.test_labels);
    CHECK(accuracy >= 0.90);
}

TEST_CASE("interval forest is deterministic in its seed") {
    const testing::ClassificationExperiment exp = testing::level_shift_experiment(9);

    TimeSeriesForestClassifier first(25, 7);
    first.fit(exp.train, exp.train_labels);
    TimeSeriesForestClassifier second(25, 7);
    second.fit(exp.train, exp.train_labels);

    CHECK(first.predict(exp.test) == second.predict(exp.test));
    for (std::size_t t = 0; t < first.n_trees_fitted(); ++t) {
        CHECK(first.intervals_of(t) == second.intervals_of(t));
    }

    TimeSeriesForestClassifier other_seed(25, 8);
    other_seed.fit(exp.train, exp.train_labels);
    bool any_difference = false;
    for (std::size_t t = 0; t < first.n_trees_fitted() && !any_difference; ++t) {
        any_difference = !(first.intervals_of(t) == other_seed.intervals_of(t));
    }
    CHECK(any_difference);
}

TEST_CASE("interval forest draws sqrt-many intervals per tree") {
    const testing::ClassificationExperiment exp = testing::level_shift_experiment(4);
    TimeSeriesForestClassifier tsf(3, 2);
    tsf.fit(exp.train, exp.train_labels);
    for (std::size_t t = 0; t < 3; ++t) {
        const std::vector<transform::Interval>& intervals = tsf.intervals_of(t);
        CHECK(intervals.size() == 8);
        for (const transform::Interval& iv : intervals) {
            CHECK(iv.length() >= 3);
            CHECK(iv.end <= 50);
        }
    }
}

TEST_CASE("interval forest validates its inputs") {
    TimeSeriesForestClassifier tsf(2, 0);
    CHECK_THROWS_AS(TimeSeriesForestClassifier(0), InvalidParameter);

    const Panel too_short = Panel::of_series("y", {series_of({1, 2}), series_of({3, 4})});
    CHECK_THROWS_AS(tsf.fit(too_short, {"a", "b"}), SeriesTooShort);

    const Panel ragged = Panel::of_series("y", {series_of({1, 2, 3}), series_of({1, 2, 3, 4})});
    CHECK_THROWS_AS(tsf.fit(ragged, {"a", "b"}), LengthMismatch);

    CHECK_THROWS_AS(tsf.predict(one_series({1, 2, 3})), NotFitted);

    const Panel train = Panel::of_series("y", {series_of({0, 0, 0}), series_of({5, 5, 5})});
    tsf.fit(train, {"a", "b"});
    CHECK_THROWS_AS(tsf.classify(series_of({1, 2, 3, 4})), LengthMismatch);
}

TEST_CASE("interval forest routes its parameters") {
    TimeSeriesForestClassifier tsf(15, 3);
    CHECK(as_int(tsf.get_params().at("n_trees"), "n_trees") == 15);
    CHECK(as_int(tsf.get_params().at("seed"), "seed") == 3);

    tsf.set_params({{"n_trees", std::int64_t{4}}, {"seed", std::int64_t{11}}});
    CHECK(as_int(tsf.get_params().at("n_trees"), "n_trees") == 4);
    CHECK_THROWS_AS(tsf.set_params({{"n_trees", std::int64_t{0}}}), InvalidParameter);

    const Panel train = Panel::of_series("y", {series_of({0, 0, 0}), series_of({5, 5, 5})});
    tsf.fit(train, {"a", "b"});
    std::unique_ptr<TimeSeriesForestClassifier> clone = clone_as(tsf);
    CHECK(clone->get_params() == tsf.get_params());
    CHECK_FALSE(clone->is_fitted());
}
