#pragma once

#include <cstdint>
#include <string>

#include "tsml/time_series.hpp"

namespace tsml::transform {

enum class Aggregation { Mean, Sum, Min, Max };

std::string aggregation_name(Aggregation agg);
Aggregation aggregation_from_name(const std::string& name);

/// Aggregates the series into n_bins contiguous bins of near-equal count; when
/// the length is not divisible the leading bins take one extra observation.
/// Each output point keeps the first time point of its bin.
TimeSeries time_bin_aggregate(const TimeSeries& y, std::int64_t n_bins, Aggregation agg);

}  // namespace tsml::transform
