#include "tsml/forecast/naive.hpp"

#include "tsml/errors.hpp"
#include "tsml/util.hpp"

namespace tsml::forecast {

namespace {

void check_strategy(const std::string& strategy) {
    if (strategy != "last" && strategy != "mean" && strategy != "seasonal_last") {
        throw InvalidParameter("unknown naive strategy '" + strategy +
                               "'; expected last, mean, or seasonal_last");
    }
}

}  // namespace

NaiveForecaster::NaiveForecaster(std::string strategy, std::int64_t sp)
    : strategy_(std::move(strategy)), sp_(sp) {
    check_strategy(strategy_);
}

std::unique_ptr<Estimator> NaiveForecaster::clone_unfitted() const {
    return std::make_unique<NaiveForecaster>(strategy_, sp_);
}

ParamMap NaiveForecaster::own_params() const {
    return {{"strategy", strategy_}, {"sp", sp_}};
}

void NaiveForecaster::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "strategy") {
        const std::string strategy = as_string(value, name);
        check_strategy(strategy);
        strategy_ = strategy;
    } else if (name == "sp") {
        sp_ = as_int(value, name);
    } else {
        Estimator::apply_param(name, value);
    }
}

void NaiveForecaster::do_fit(const TimeSeries& y, const ForecastingHorizon*) {
    if (strategy_ == "seasonal_last") {
        if (sp_ < 1) {
            throw InvalidParameter("sp must be >= 1");
        }
        if (y.size() < static_cast<std::size_t>(sp_)) {
            throw SeriesTooShort("seasonal_last needs at least sp observations");
        }
    }
    mean_ = mean_of(y.values());
}

std::vector<double> NaiveForecaster::do_predict(const std::vector<std::int64_t>& steps) const {
    const std::vector<double>& y = training_values();
    std::vector<double> out;
    out.reserve(steps.size());
    for (std::int64_t s : steps) {
        if (strategy_ == "last") {
            out.push_back(y.back());
        } else if (strategy_ == "mean") {
            out.push_back(mean_);
        } else {
            const std::size_t offset = static_cast<std::size_t>((s - 1) % sp_);
            out.push_back(y[y.size() - static_cast<std::size_t>(sp_) + offset]);
        }
    }
    return out;
}

double NaiveForecaster::in_sample_value(std::size_t position) const {
    const std::vector<double>& y = training_values();
    if (strategy_ == "mean") {
        return mean_;
    }
    if (strategy_ == "last") {
        return position == 0 ? y[0] : y[position - 1];
    }
    const std::size_t sp = static_cast<std::size_t>(sp_);
    return position < sp ? y[position] : y[position - sp];
}

}  // namespace tsml::forecast
