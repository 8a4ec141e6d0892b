#include "tsml/forecast/smoothing.hpp"

#include <limits>

#include "tsml/errors.hpp"

namespace tsml::forecast {

namespace {

// 0 is the auto-selection sentinel; a fixed value must lie in (0, 1].
void check_rate(double value, const std::string& name) {
    if (value < 0.0 || value > 1.0) {
        throw InvalidParameter(name + " must lie in (0, 1], or 0 for automatic selection");
    }
}

struct SmoothingRun {
    double level = 0.0;
    double trend = 0.0;
    double sse = 0.0;
    std::vector<double> fitted;
};

SmoothingRun run_recursion(const std::vector<double>& y, bool trend, double alpha, double beta) {
    SmoothingRun run;
    run.fitted.resize(y.size());
    double level = y[0];
    double slope = trend ? y[1] - y[0] : 0.0;
    run.fitted[0] = level;
    run.sse = 0.0;
    for (std::size_t t = 1; t < y.size(); ++t) {
        const double forecast = trend ? level + slope : level;
        run.fitted[t] = forecast;
        const double err = y[t] - forecast;
        run.sse += err * err;
        const double previous_level = level;
        level = alpha * y[t] + (1.0 - alpha) * (trend ? level + slope : level);
        if (trend) {
            slope = beta * (level - previous_level) + (1.0 - beta) * slope;
        }
    }
    run.level = level;
    run.trend = slope;
    return run;
}

}  // namespace

ExpSmoothingForecaster::ExpSmoothingForecaster(bool trend, double alpha, double beta)
    : trend_(trend), alpha_param_(alpha), beta_param_(beta) {
    check_rate(alpha, "alpha");
    check_rate(beta, "beta");
}

std::unique_ptr<Estimator> ExpSmoothingForecaster::clone_unfitted() const {
    return std::make_unique<ExpSmoothingForecaster>(trend_, alpha_param_, beta_param_);
}

double ExpSmoothingForecaster::alpha() const {
    require_fitted();
    return alpha_fit_;
}

double ExpSmoothingForecaster::beta() const {
    require_fitted();
    return beta_fit_;
}

double ExpSmoothingForecaster::level() const {
    require_fitted();
    return level_;
}

double ExpSmoothingForecaster::trend_term() const {
    require_fitted();
    return trend_fit_;
}

ParamMap ExpSmoothingForecaster::own_params() const {
    return {{"trend", trend_}, {"alpha", alpha_param_}, {"beta", beta_param_}};
}

void ExpSmoothingForecaster::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "trend") {
        trend_ = as_bool(value, name);
    } else if (name == "alpha") {
        const double alpha = as_double(value, name);
        check_rate(alpha, name);
        alpha_param_ = alpha;
    } else if (name == "beta") {
        const double beta = as_double(value, name);
        check_rate(beta, name);
        beta_param_ = beta;
    } else {
        Estimator::apply_param(name, value);
    }
}

void ExpSmoothingForecaster::do_fit(const TimeSeries& y, const ForecastingHorizon*) {
    const std::size_t min_length = trend_ ? 3 : 2;
    if (y.size() < min_length) {
        throw SeriesTooShort(std::string(trend_ ? "Holt" : "simple") +
                             " smoothing needs at least " + std::to_string(min_length) +
                             " observations");
    }

    std::vector<double> alpha_grid;
    std::vector<double> beta_grid;
    if (alpha_param_ > 0.0) {
        alpha_grid.push_back(alpha_param_);
    } else {
        for (int i = 1; i <= 19; ++i) {
            alpha_grid.push_back(static_cast<double>(i) / 20.0);
        }
    }
    if (!trend_) {
        beta_grid.push_back(0.0);
    } else if (beta_param_ > 0.0) {
        beta_grid.push_back(beta_param_);
    } else {
        for (int i = 1; i <= 19; ++i) {
            beta_grid.push_back(static_cast<double>(i) / 20.0);
        }
    }

    double best_sse = std::numeric_limits<double>::infinity();
    for (double alpha : alpha_grid) {
        for (double beta : beta_grid) {
            const SmoothingRun run = run_recursion(y.values(), trend_, alpha, beta);
            if (run.sse < best_sse) {
                best_sse = run.sse;
                alpha_fit_ = alpha;
                beta_fit_ = beta;
                level_ = run.level;
                trend_fit_ = run.trend;
                fitted_ = run.fitted;
            }
        }
    }
}

std::vector<double> ExpSmoothingForecaster::do_predict(
    const std::vector<std::int64_t>& steps) const {
    std::vector<double> out;
    out.reserve(steps.size());
    for (std::int64_t s : steps) {
        out.push_back(trend_ ? level_ + static_cast<double>(s) * trend_fit_ : level_);
    }
    return out;
}

double ExpSmoothingForecaster::in_sample_value(std::size_t position) const {
    return fitted_[position];
}

}  // namespace tsml::forecast
