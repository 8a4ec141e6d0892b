#include "tsml/forecast/reduction.hpp"

#include <algorithm>

#include "tsml/errors.hpp"
#include "tsml/transform/sliding.hpp"

namespace tsml::forecast {

namespace {

void check_method(const std::string& method) {
    if (method != "recursive" && method != "direct") {
        throw InvalidParameter("unknown reduction method '" + method +
                               "'; expected recursive or direct");
    }
}

}  // namespace

ReducedRegressionForecaster::ReducedRegressionForecaster(
    std::unique_ptr<tabular::Regressor> regressor, std::int64_t window_length,
    std::string method)
    : prototype_(std::move(regressor)), window_length_(window_length), method_(std::move(method)) {
    if (prototype_ == nullptr) {
        throw InvalidParameter("reduction needs a regressor prototype");
    }
    if (window_length_ < 1) {
        throw InvalidParameter("window_length must be >= 1");
    }
    check_method(method_);
}

std::unique_ptr<Estimator> ReducedRegressionForecaster::clone_unfitted() const {
    return std::make_unique<ReducedRegressionForecaster>(clone_as(*prototype_), window_length_,
                                                         method_);
}

ParamMap ReducedRegressionForecaster::own_params() const {
    return {{"window_length", window_length_},
            {"method", method_},
            {"step_length", std::int64_t{1}}};
}

void ReducedRegressionForecaster::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "window_length") {
        const std::int64_t w = as_int(value, name);
        if (w < 1) {
            throw InvalidParameter("window_length must be >= 1");
        }
        window_length_ = w;
    } else if (name == "method") {
        const std::string method = as_string(value, name);
        check_method(method);
        method_ = method;
    } else if (name == "step_length") {
        if (as_int(value, name) != 1) {
            throw InvalidParameter("step_length is reserved; only 1 is supported");
        }
    } else {
        Estimator::apply_param(name, value);
    }
}

std::vector<std::pair<std::string, const Estimator*>> ReducedRegressionForecaster::components()
    const {
    return {{"regressor", prototype_.get()}};
}

std::vector<std::pair<std::string, Estimator*>> ReducedRegressionForecaster::components() {
    return {{"regressor", prototype_.get()}};
}

void ReducedRegressionForecaster::do_fit(const TimeSeries& y, const ForecastingHorizon* fh) {
    recursive_model_.reset();
    direct_models_.clear();
    if (method_ == "recursive") {
        const transform::TabularizedSet set = transform::tabularize_sliding(y, window_length_);
        recursive_model_ = clone_as(*prototype_);
        recursive_model_->fit(set.x, set.targets);
        return;
    }
    if (fh == nullptr) {
        throw DirectNeedsHorizon("the direct strategy needs the horizon at fit time");
    }
    const std::vector<std::int64_t> steps =
        fh->to_relative(y.index().back(), *y.index().spacing());
    for (std::int64_t h : steps) {
        const transform::TabularizedSet set = transform::tabularize_sliding(y, window_length_, h);
        auto model = clone_as(*prototype_);
        model->fit(set.x, set.targets);
        direct_models_.emplace(h, std::move(model));
    }
}

std::vector<double> ReducedRegressionForecaster::do_predict(
    const std::vector<std::int64_t>& steps) const {
    const std::vector<double>& y = training_values();
    const std::size_t w = static_cast<std::size_t>(window_length_);
    std::vector<double> out;
    out.reserve(steps.size());

    if (method_ == "recursive") {
        std::vector<double> window(y.end() - static_cast<std::ptrdiff_t>(w), y.end());
        const std::int64_t max_step = steps.back();
        std::vector<double> rolled;
        rolled.reserve(static_cast<std::size_t>(max_step));
        for (std::int64_t s = 1; s <= max_step; ++s) {
            const double prediction = recursive_model_->predict_row(window);
            rolled.push_back(prediction);
            window.erase(window.begin());
            window.push_back(prediction);
        }
        for (std::int64_t s : steps) {
            out.push_back(rolled[static_cast<std::size_t>(s - 1)]);
        }
        return out;
    }

    const std::vector<double> window(y.end() - static_cast<std::ptrdiff_t>(w), y.end());
    for (std::int64_t s : steps) {
        const auto it = direct_models_.find(s);
        if (it == direct_models_.end()) {
            throw HorizonMismatch("step " + std::to_string(s) +
                                  " was not in the horizon given at fit time");
        }
        out.push_back(it->second->predict_row(window));
    }
    return out;
}

double ReducedRegressionForecaster::in_sample_value(std::size_t position) const {
    const std::vector<double>& y = training_values();
    const std::size_t w = static_cast<std::size_t>(window_length_);

    if (method_ == "recursive") {
        if (position < w) {
            throw InSampleUnavailable("in-sample predictions start at position " +
                                      std::to_string(w));
        }
        const std::vector<double> window(y.begin() + static_cast<std::ptrdiff_t>(position - w),
                                         y.begin() + static_cast<std::ptrdiff_t>(position));
        return recursive_model_->predict_row(window);
    }

    // The smallest fitted step h serves in-sample values: position p is
    // predicted from the window ending h steps earlier, so p >= w + h - 1.
    const std::int64_t h = direct_models_.begin()->first;
    const std::size_t reach = w + static_cast<std::size_t>(h) - 1;
    if (position < reach) {
        throw InSampleUnavailable("in-sample predictions start at position " +
                                  std::to_string(reach));
    }
    const std::size_t start = position - reach;
    const std::vector<double> window(y.begin() + static_cast<std::ptrdiff_t>(start),
                                     y.begin() + static_cast<std::ptrdiff_t>(start + w));
    return direct_models_.begin()->second->predict_row(window);
}

}  // namespace tsml::forecast
