#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "test_util.hpp"
#include "tsml/errors.hpp"
#include "tsml/forecast/naive.hpp"
#include "tsml/forecast/poly.hpp"
#include "tsml/forecast/reduction.hpp"
#include "tsml/forecast/smoothing.hpp"
#include "tsml/tabular/knn.hpp"
#include "tsml/tabular/linear.hpp"

using namespace tsml;
using namespace tsml::forecast;

namespace {

TimeSeries series_of(std::vector<double> values) { return TimeSeries::from_values(std::move(values)); }

ForecastingHorizon fh(std::vector<std::int64_t> steps) {
    return ForecastingHorizon::relative(std::move(steps));
}

}  // namespace

TEST_CASE("naive last repeats the final observation") {
    NaiveForecaster naive;
    naive.fit(series_of({1, 2, 3}));
    const TimeSeries out = naive.predict(fh({1, 2}));
    CHECK(out.values() == std::vector<double>{3, 3});
    CHECK(out.index().points() == std::vector<TimePoint>{3, 4});
}

TEST_CASE("naive mean forecasts the training mean") {
    NaiveForecaster naive("mean");
    naive.fit(series_of({2, 4}));
    CHECK(naive.predict(fh({1})).values() == std::vector<double>{3});
}

TEST_CASE("naive seasonal_last repeats the final cycle") {
    NaiveForecaster naive("seasonal_last", 2);
    naive.fit(series_of({1, 2, 3, 4}));
    CHECK(naive.predict(fh({1, 2})).values() == std::vector<double>{3, 4});
    CHECK(naive.predict(fh({3, 4})).values() == std::vector<double>{3, 4});

    NaiveForecaster short_series("seasonal_last", 9);
    CHECK_THROWS_AS(short_series.fit(series_of({1, 2})), SeriesTooShort);
    CHECK_THROWS_AS(NaiveForecaster("bogus"), InvalidParameter);
}

TEST_CASE("naive in-sample values are one-step analogues") {
    NaiveForecaster last;
    last.fit(series_of({5, 7, 9}));
    CHECK(last.predict_in_sample({0, 1, 2}).values() == std::vector<double>{5, 5, 7});

    NaiveForecaster seasonal("seasonal_last", 2);
    seasonal.fit(series_of({1, 2, 3, 4}));
    CHECK(seasonal.predict_in_sample({0, 1, 2, 3}).values() == std::vector<double>{1, 2, 1, 2});
}

TEST_CASE("forecaster contract enforcement") {
    NaiveForecaster naive;
    CHECK_THROWS_AS(naive.predict(fh({1})), NotFitted);
    CHECK_THROWS_AS(naive.fit(TimeSeries(TimeIndex({0, 1, 3}), {1, 2, 3})), UnequalSpacing);

    naive.fit(TimeSeries(TimeIndex::range(0, 4, 2), {1, 2, 3, 4}));
    CHECK(naive.cutoff() == 6);
    CHECK(naive.resolution() == 2);
    CHECK_THROWS_AS(naive.predict(ForecastingHorizon::absolute({7})), MisalignedHorizon);
    CHECK_THROWS_AS(naive.predict(ForecastingHorizon::absolute({6})), HorizonNotInFuture);
    CHECK(naive.predict(ForecastingHorizon::absolute({8})).values() == std::vector<double>{4});
    CHECK_THROWS_AS(naive.predict_in_sample({1}), InSampleUnavailable);
}

TEST_CASE("poly trend continues an exact line") {
    PolyTrendForecaster poly(1);
    poly.fit(series_of({1, 2, 3}));
    CHECK(poly.predict(fh({1})).values()[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(poly.coefficients()[0] == doctest::Approx(1.0));
    CHECK(poly.coefficients()[1] == doctest::Approx(1.0));
}

TEST_CASE("poly degree zero forecasts a constant") {
    PolyTrendForecaster poly(0);
    poly.fit(series_of({6}));
    CHECK(poly.predict(fh({1, 2})).values() == std::vector<double>{6, 6});
}

TEST_CASE("poly continues an exact parabola") {
    PolyTrendForecaster poly(2);
    poly.fit(series_of({1, 4, 9, 16}));
    CHECK(poly.predict(fh({1})).values()[0] == doctest::Approx(25.0).epsilon(1e-9));
}

TEST_CASE("poly degree zero equals the naive mean strategy") {
    Rng rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> values;
        const int n = static_cast<int>(rng.uniform_int(1, 12));
        for (int i = 0; i < n; ++i) {
            values.push_back(rng.normal() * 5.0);
        }
        PolyTrendForecaster poly(0);
        NaiveForecaster naive("mean");
        poly.fit(series_of(values));
        naive.fit(series_of(values));
        CHECK(poly.predict(fh({1, 3})).values() == naive.predict(fh({1, 3})).values());
    }
}

TEST_CASE("poly validates length against degree") {
    PolyTrendForecaster poly(3);
    CHECK_THROWS_AS(poly.fit(series_of({1, 2, 3})), SeriesTooShort);
    CHECK_THROWS_AS(PolyTrendForecaster(-1), InvalidParameter);
}

TEST_CASE("poly in-sample values evaluate the trend") {
    PolyTrendForecaster poly(1);
    poly.fit(series_of({2, 4, 6}));
    const TimeSeries fitted = poly.predict_in_sample({0, 1, 2});
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(fitted[i] == doctest::Approx(2.0 + 2.0 * static_cast<double>(i)).epsilon(1e-12));
    }
}

TEST_CASE("ses with alpha 1 equals naive last") {
    Rng rng(20);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> values;
        const int n = static_cast<int>(rng.uniform_int(2, 15));
        for (int i = 0; i < n; ++i) {
            values.push_back(rng.normal() * 3.0);
        }
        ExpSmoothingForecaster ses(false, 1.0);
        NaiveForecaster naive;
        ses.fit(series_of(values));
        naive.fit(series_of(values));
        CHECK(ses.predict(fh({1, 2, 5})).values() == naive.predict(fh({1, 2, 5})).values());
    }
}

TEST_CASE("ses recursion matches the hand-computed level") {
    ExpSmoothingForecaster ses(false, 0.5);
    ses.fit(series_of({2, 4}));
    CHECK(ses.level() == 3.0);
    CHECK(ses.predict(fh({1, 2, 3})).values() == std::vector<double>{3, 3, 3});
}

TEST_CASE("ses auto selection resolves ties to the smallest alpha") {
    ExpSmoothingForecaster ses;
    ses.fit(series_of({4, 4, 4, 4, 4}));
    CHECK(ses.alpha() == 0.05);
}

TEST_CASE("ses in-sample one-step forecasts") {
    ExpSmoothingForecaster ses(false, 0.5);
    ses.fit(series_of({2, 4, 4}));
    CHECK(ses.predict_in_sample({0, 1, 2}).values() == std::vector<double>{2, 2, 3});

    ExpSmoothingForecaster shifted(false, 1.0);
    shifted.fit(series_of({3, 1, 7}));
    CHECK(shifted.predict_in_sample({0, 1, 2}).values() == std::vector<double>{3, 3, 1});
}

TEST_CASE("holt continues a linear trend") {
    ExpSmoothingForecaster holt(true, 0.5, 0.5);
    holt.fit(series_of({6, 8, 10}));
    CHECK(holt.level() == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(holt.trend_term() == doctest::Approx(2.0).epsilon(1e-12));
    const TimeSeries out = holt.predict(fh({1, 2}));
    CHECK(out[0] == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(out[1] == doctest::Approx(14.0).epsilon(1e-12));
}

TEST_CASE("smoothing validates lengths and rates") {
    ExpSmoothingForecaster ses;
    CHECK_THROWS_AS(ses.fit(series_of({1})), SeriesTooShort);
    ExpSmoothingForecaster holt(true);
    CHECK_THROWS_AS(holt.fit(series_of({1, 2})), SeriesTooShort);
    CHECK_THROWS_AS(ExpSmoothingForecaster(false, 1.5), InvalidParameter);
    CHECK_THROWS_AS(ExpSmoothingForecaster(true, 0.5, -0.1), InvalidParameter);
}

TEST_CASE("recursive ols reduction continues the pattern") {
    auto make = [] {
        return ReducedRegressionForecaster(std::make_unique<tabular::OlsRegressor>(), 1);
    };
    ReducedRegressionForecaster forecaster = make();
    forecaster.fit(series_of({1, 2, 3, 4, 5}));
    const TimeSeries out = forecaster.predict(fh({1, 2}));
    CHECK(out[0] == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(out[1] == doctest::Approx(7.0).epsilon(1e-9));

    ReducedRegressionForecaster third = make();
    third.fit(series_of({1, 2, 3, 4, 5}));
    const TimeSeries step3 = third.predict(fh({3}));
    CHECK(step3.size() == 1);
    CHECK(step3[0] == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(step3.index().points() == std::vector<TimePoint>{7});
}

TEST_CASE("recursive reduction tracks an arithmetic progression over ten steps") {
    std::vector<double> values;
    for (int i = 1; i <= 20; ++i) {
        values.push_back(static_cast<double>(i));
    }
    ReducedRegressionForecaster forecaster(std::make_unique<tabular::OlsRegressor>(), 3);
    forecaster.fit(series_of(values));
    const TimeSeries out =
        forecaster.predict(fh({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(std::fabs(out[i] - static_cast<double>(21 + i)) <= 1e-8);
    }
}

TEST_CASE("direct reduction fits one model per step") {
    ReducedRegressionForecaster direct(std::make_unique<tabular::OlsRegressor>(), 1, "direct");
    const ForecastingHorizon horizon = fh({1, 2});
    direct.fit(series_of({1, 2, 3, 4, 5}), horizon);
    const TimeSeries out = direct.predict(horizon);
    CHECK(out[0] == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(out[1] == doctest::Approx(7.0).epsilon(1e-9));

    CHECK_THROWS_AS(direct.predict(fh({3})), HorizonMismatch);

    ReducedRegressionForecaster no_fh(std::make_unique<tabular::OlsRegressor>(), 1, "direct");
    CHECK_THROWS_AS(no_fh.fit(series_of({1, 2, 3})), DirectNeedsHorizon);
}

TEST_CASE("direct and recursive agree on a single-step horizon") {
    Rng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> values;
        for (int i = 0; i < 12; ++i) {
            values.push_back(rng.normal() * 2.0 + static_cast<double>(i));
        }
        ReducedRegressionForecaster recursive(std::make_unique<tabular::OlsRegressor>(), 3);
        ReducedRegressionForecaster direct(std::make_unique<tabular::OlsRegressor>(), 3,
                                           "direct");
        const ForecastingHorizon one = fh({1});
        recursive.fit(series_of(values), one);
        direct.fit(series_of(values), one);
        CHECK(recursive.predict(one).values() == direct.predict(one).values());
    }
}

TEST_CASE("reduction on a constant series with knn stays constant") {
    ReducedRegressionForecaster forecaster(std::make_unique<tabular::KnnRegressor>(1), 2);
    forecaster.fit(series_of({5, 5, 5, 5, 5}));
    CHECK(forecaster.predict(fh({1, 2, 3})).values() == std::vector<double>{5, 5, 5});
}

TEST_CASE("reduction exposes nested regressor parameters") {
    ReducedRegressionForecaster forecaster(std::make_unique<tabular::KnnRegressor>(3), 2);
    const ParamMap params = forecaster.get_params();
    CHECK(params.at("window_length") == ParamValue{std::int64_t{2}});
    CHECK(params.at("method") == ParamValue{std::string{"recursive"}});
    CHECK(params.at("regressor__k") == ParamValue{std::int64_t{3}});

    forecaster.set_params({{"regressor__k", std::int64_t{1}}, {"window_length", std::int64_t{4}}});
    CHECK(forecaster.get_params().at("regressor__k") == ParamValue{std::int64_t{1}});
    CHECK_THROWS_AS(forecaster.set_params({{"step_length", std::int64_t{2}}}), InvalidParameter);
    forecaster.set_params({{"step_length", std::int64_t{1}}});

    const auto clone = clone_as(forecaster);
    CHECK(clone->get_params() == forecaster.get_params());
    CHECK_FALSE(clone->is_fitted());
}

TEST_CASE("reduction window must leave at least one training row") {
    ReducedRegressionForecaster forecaster(std::make_unique<tabular::KnnRegressor>(1), 2);
    CHECK_THROWS_AS(forecaster.fit(series_of({1, 2})), WindowTooLong);
}

TEST_CASE("reduction in-sample values start at the window length") {
    ReducedRegressionForecaster forecaster(std::make_unique<tabular::OlsRegressor>(), 1);
    forecaster.fit(series_of({1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(forecaster.predict_in_sample({0}), InSampleUnavailable);
    const TimeSeries fitted = forecaster.predict_in_sample({1, 2, 3, 4});
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(fitted[i] == doctest::Approx(static_cast<double>(i + 2)).epsilon(1e-9));
    }
}

TEST_CASE("all forecasters return the absolute horizon as the index") {
    const TimeSeries y(TimeIndex::range(100, 6, 5), {1, 2, 3, 4, 5, 6});
    const ForecastingHorizon horizon = fh({1, 4});

    std::vector<std::unique_ptr<Forecaster>> forecasters;
    forecasters.push_back(std::make_unique<NaiveForecaster>());
    forecasters.push_back(std::make_unique<PolyTrendForecaster>(1));
    forecasters.push_back(std::make_unique<ExpSmoothingForecaster>());
    forecasters.push_back(
        std::make_unique<ReducedRegressionForecaster>(std::make_unique<tabular::OlsRegressor>(), 2));

    for (const auto& forecaster : forecasters) {
        forecaster->fit(y, horizon);
        const TimeSeries out = forecaster->predict(horizon);
        CHECK(out.index().points() == std::vector<TimePoint>{130, 145});
        CHECK(out.size() == 2);
    }
}
