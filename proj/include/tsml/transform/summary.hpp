#pragma once

#include <string>
#include <vector>

#include "tsml/time_series.hpp"

namespace tsml::transform {

enum class SummaryFeature { Mean, Std, Slope, Min, Max, Median };

std::string feature_name(SummaryFeature feature);
SummaryFeature feature_from_name(const std::string& name);

/// One primitive per requested feature. Std is the sample standard deviation
/// (T - 1 divisor); slope is least squares against positions 0..T-1; both
/// need T >= 2.
std::vector<double> extract_summary_features(const TimeSeries& y,
                                             const std::vector<SummaryFeature>& features);

}  // namespace tsml::transform
