#include "tsml/forecast/forecaster.hpp"

#include <string>

#include "tsml/errors.hpp"

namespace tsml::forecast {

void Forecaster::fit(const TimeSeries& y) { fit_impl(y, nullptr); }

void Forecaster::fit(const TimeSeries& y, const ForecastingHorizon& fh) { fit_impl(y, &fh); }

void Forecaster::fit_impl(const TimeSeries& y, const ForecastingHorizon* fh) {
    if (!y.index().spacing().has_value()) {
        throw UnequalSpacing("forecasters need an equally spaced training index");
    }
    clear_fitted();
    train_ = y;
    resolution_ = *y.index().spacing();
    do_fit(y, fh);
    mark_fitted();
}

TimeSeries Forecaster::predict(const ForecastingHorizon& fh) const {
    require_fitted();
    const std::vector<std::int64_t> steps = fh.to_relative(cutoff(), resolution_);
    std::vector<double> values = do_predict(steps);
    return TimeSeries(TimeIndex(fh.to_absolute(cutoff(), resolution_)), std::move(values));
}

TimeSeries Forecaster::predict_in_sample(const std::vector<TimePoint>& points) const {
    require_fitted();
    std::vector<double> values;
    values.reserve(points.size());
    for (TimePoint p : points) {
        const auto position = train_->index().position_of(p);
        if (!position) {
            throw InSampleUnavailable("time point " + std::to_string(p) +
                                      " is not in the training index");
        }
        values.push_back(in_sample_value(*position));
    }
    return TimeSeries(TimeIndex(points), std::move(values));
}

const TimeIndex& Forecaster::training_index() const {
    require_fitted();
    return train_->index();
}

TimePoint Forecaster::cutoff() const {
    require_fitted();
    return train_->index().back();
}

TimePoint Forecaster::resolution() const {
    require_fitted();
    return resolution_;
}

const std::vector<double>& Forecaster::training_values() const {
    require_fitted();
    return train_->values();
}

}  // namespace tsml::forecast
