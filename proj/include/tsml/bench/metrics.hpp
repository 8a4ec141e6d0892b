#pragma once

#include <span>
#include <string>
#include <vector>

namespace tsml::bench {

/// Symmetric mean absolute percentage error on the 0..200 scale;
/// terms with |y| + |yhat| == 0 contribute 0.
double smape(std::span<const double> actual, std::span<const double> predicted);

/// Mean absolute error scaled by the training series' mean one-step
/// naive error; the training series must not be constant.
double mase(std::span<const double> actual, std::span<const double> predicted,
            std::span<const double> train);

double rmse(std::span<const double> actual, std::span<const double> predicted);

/// Fraction of positions where the two label sequences agree.
double accuracy(const std::vector<std::string>& actual,
                const std::vector<std::string>& predicted);

}  // namespace tsml::bench
