#include "tsml/compose/forecast_pipeline.hpp"

#include <set>

#include "tsml/errors.hpp"

namespace tsml::compose {

ForecastingPipeline::ForecastingPipeline(
    std::vector<std::pair<std::string, transform::Detrender>> steps, std::string final_name,
    std::unique_ptr<forecast::Forecaster> final)
    : steps_(std::move(steps)), final_name_(std::move(final_name)), final_(std::move(final)) {
    if (final_ == nullptr) {
        throw InvalidParameter("forecasting pipeline needs a final forecaster");
    }
    if (final_name_.empty()) {
        throw InvalidParameter("pipeline step names must be non-empty");
    }
    std::set<std::string> names{final_name_};
    for (const auto& [name, step] : steps_) {
        if (name.empty()) {
            throw InvalidParameter("pipeline step names must be non-empty");
        }
        if (!names.insert(name).second) {
            throw InvalidParameter("duplicate pipeline step name '" + name + "'");
        }
    }
}

std::unique_ptr<Estimator> ForecastingPipeline::clone_unfitted() const {
    std::vector<std::pair<std::string, transform::Detrender>> steps;
    steps.reserve(steps_.size());
    for (const auto& [name, step] : steps_) {
        std::unique_ptr<transform::Detrender> clone = clone_as(step);
        steps.emplace_back(name, std::move(*clone));
    }
    return std::make_unique<ForecastingPipeline>(std::move(steps), final_name_,
                                                 clone_as(*final_));
}

std::vector<std::pair<std::string, const Estimator*>> ForecastingPipeline::components() const {
    std::vector<std::pair<std::string, const Estimator*>> out;
    out.reserve(steps_.size() + 1);
    for (const auto& [name, step] : steps_) {
        out.emplace_back(name, &step);
    }
    out.emplace_back(final_name_, final_.get());
    return out;
}

std::vector<std::pair<std::string, Estimator*>> ForecastingPipeline::components() {
    std::vector<std::pair<std::string, Estimator*>> out;
    out.reserve(steps_.size() + 1);
    for (auto& [name, step] : steps_) {
        out.emplace_back(name, &step);
    }
    out.emplace_back(final_name_, final_.get());
    return out;
}

void ForecastingPipeline::do_fit(const TimeSeries& y, const ForecastingHorizon* fh) {
    TimeSeries current = y;
    for (auto& [name, step] : steps_) {
        step.fit(current);
        current = step.transform(current);
    }
    if (fh != nullptr) {
        final_->fit(current, *fh);
    } else {
        final_->fit(current);
    }
}

std::vector<double> ForecastingPipeline::do_predict(const std::vector<std::int64_t>& steps) const {
    TimeSeries prediction = final_->predict(ForecastingHorizon::relative(steps));
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        prediction = it->second.inverse(prediction);
    }
    return prediction.values();
}

double ForecastingPipeline::in_sample_value(std::size_t position) const {
    const TimePoint t = final_->training_index()[position];
    double value = final_->predict_in_sample({t})[0];
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        value += it->second.trend_at(TimeIndex({t}))[0];
    }
    return value;
}

}  // namespace tsml::compose
