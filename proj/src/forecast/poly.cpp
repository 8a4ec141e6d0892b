#include "tsml/forecast/poly.hpp"

#include "tsml/errors.hpp"
#include "tsml/linalg.hpp"

namespace tsml::forecast {

PolyTrendForecaster::PolyTrendForecaster(std::int64_t degree) : degree_(degree) {
    if (degree < 0) {
        throw InvalidParameter("degree must be >= 0");
    }
}

std::unique_ptr<Estimator> PolyTrendForecaster::clone_unfitted() const {
    return std::make_unique<PolyTrendForecaster>(degree_);
}

const std::vector<double>& PolyTrendForecaster::coefficients() const {
    require_fitted();
    return coef_;
}

ParamMap PolyTrendForecaster::own_params() const { return {{"degree", degree_}}; }

void PolyTrendForecaster::apply_param(const std::string& name, const ParamValue& value) {
    if (name == "degree") {
        const std::int64_t degree = as_int(value, name);
        if (degree < 0) {
            throw InvalidParameter("degree must be >= 0");
        }
        degree_ = degree;
    } else {
        Estimator::apply_param(name, value);
    }
}

void PolyTrendForecaster::do_fit(const TimeSeries& y, const ForecastingHorizon*) {
    if (y.size() < static_cast<std::size_t>(degree_) + 1) {
        throw SeriesTooShort("polynomial of degree " + std::to_string(degree_) + " needs " +
                             std::to_string(degree_ + 1) + " observations");
    }
    std::vector<std::vector<double>> design(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        design[i].resize(static_cast<std::size_t>(degree_) + 1);
        double power = 1.0;
        for (std::size_t p = 0; p < design[i].size(); ++p) {
            design[i][p] = power;
            power *= static_cast<double>(i);
        }
    }
    coef_ = linalg::least_squares(design, y.values());
}

double PolyTrendForecaster::eval(double position) const {
    double out = 0.0;
    double power = 1.0;
    for (double c : coef_) {
        out += c * power;
        power *= position;
    }
    return out;
}

std::vector<double> PolyTrendForecaster::do_predict(
    const std::vector<std::int64_t>& steps) const {
    const double last_position = static_cast<double>(training_values().size() - 1);
    std::vector<double> out;
    out.reserve(steps.size());
    for (std::int64_t s : steps) {
        out.push_back(eval(last_position + static_cast<double>(s)));
    }
    return out;
}

double PolyTrendForecaster::in_sample_value(std::size_t position) const {
    return eval(static_cast<double>(position));
}

}  // namespace tsml::forecast
