#include "tsml/transform/detrend.hpp"

#include "tsml/errors.hpp"
#include "tsml/forecast/poly.hpp"

namespace tsml::transform {

Detrender::Detrender(std::int64_t degree) : poly_mode_(true), degree_(degree) {
    if (degree < 0) {
        throw InvalidParameter("degree must be >= 0");
    }
}

Detrender::Detrender(std::unique_ptr<forecast::Forecaster> forecaster)
    : poly_mode_(false), prototype_(std::move(forecaster)) {
    if (prototype_ == nullptr) {
        throw InvalidParameter("detrender needs a forecaster");
    }
}

void Detrender::fit(const TimeSeries& y) {
    clear_fitted();
    if (poly_mode_) {
        auto poly = std::make_unique<forecast::PolyTrendForecaster>(degree_);
        poly->fit(y);
        coef_ = poly->coefficients();
        model_ = std::move(poly);
    } else {
        model_ = clone_as(*prototype_);
        model_->fit(y);
    }
    train_start_ = y.index().front();
    train_step_ = model_->resolution();
    mark_fitted();
}

std::vector<double> Detrender::trend_at(const TimeIndex& index) const {
    require_fitted();
    std::vector<double> out;
    out.reserve(index.size());
    if (poly_mode_) {
        for (TimePoint t : index.points()) {
            const double position = static_cast<double>(t - train_start_) /
                                    static_cast<double>(train_step_);
            double value = 0.0;
            double power = 1.0;
            for (double c : coef_) {
                value += c * power;
                power *= position;
            }
            out.push_back(value);
        }
        return out;
    }
    for (TimePoint t : index.points()) {
        if (model_->training_index().position_of(t).has_value()) {
            out.push_back(model_->predict_in_sample({t})[0]);
        } else if (t > model_->cutoff()) {
            out.push_back(model_->predict(ForecastingHorizon::absolute({t}))[0]);
        } else {
            throw InSampleUnavailable("time point " + std::to_string(t) +
                                      " precedes the training index");
        }
    }
    return out;
}

TimeSeries Detrender::transform(const TimeSeries& y) const {
    const std::vector<double> trend = trend_at(y.index());
    std::vector<double> residuals(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        residuals[i] = y[i] - trend[i];
    }
    return TimeSeries(y.index(), std::move(residuals));
}

TimeSeries Detrender::inverse(const TimeSeries& r) const {
    const std::vector<double> trend = trend_at(r.index());
    std::vector<double> values(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        values[i] = r[i] + trend[i];
    }
    return TimeSeries(r.index(), std::move(values));
}

std::unique_ptr<Estimator> Detrender::clone_unfitted() const {
    if (poly_mode_) {
        return std::make_unique<Detrender>(degree_);
    }
    return std::make_unique<Detrender>(clone_as(*prototype_));
}

ParamMap Detrender::own_params() const {
    if (poly_mode_) {
        return {{"degree", degree_}};
    }
    return {};
}

void Detrender::apply_param(const std::string& name, const ParamValue& value) {
    if (poly_mode_ && name == "degree") {
        const std::int64_t degree = as_int(value, name);
        if (degree < 0) {
            throw InvalidParameter("degree must be >= 0");
        }
        degree_ = degree;
        return;
    }
    Estimator::apply_param(name, value);
}

std::vector<std::pair<std::string, const Estimator*>> Detrender::components() const {
    if (poly_mode_) {
        return {};
    }
    return {{"forecaster", prototype_.get()}};
}

std::vector<std::pair<std::string, Estimator*>> Detrender::components() {
    if (poly_mode_) {
        return {};
    }
    return {{"forecaster", prototype_.get()}};
}

}  // namespace tsml::transform
