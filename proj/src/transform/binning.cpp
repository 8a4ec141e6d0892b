#include "tsml/transform/binning.hpp"

#include <span>
#include <string>

#include "tsml/errors.hpp"
#include "tsml/util.hpp"

namespace tsml::transform {

namespace {

double aggregate(std::span<const double> values, Aggregation agg) {
    switch (agg) {
        case Aggregation::Mean:
            return mean_of(values);
        case Aggregation::Sum: {
            double sum = 0.0;
            for (double v : values) {
                sum += v;
            }
            return sum;
        }
        case Aggregation::Min:
            return min_of(values);
        case Aggregation::Max:
            return max_of(values);
    }
    throw InvalidParameter("unknown aggregation");
}

}  // namespace

std::string aggregation_name(Aggregation agg) {
    switch (agg) {
        case Aggregation::Mean:
            return "mean";
        case Aggregation::Sum:
            return "sum";
        case Aggregation::Min:
            return "min";
        case Aggregation::Max:
            return "max";
    }
    throw InvalidParameter("unknown aggregation");
}

Aggregation aggregation_from_name(const std::string& name) {
    if (name == "mean") {
        return Aggregation::Mean;
    }
    if (name == "sum") {
        return Aggregation::Sum;
    }
    if (name == "min") {
        return Aggregation::Min;
    }
    if (name == "max") {
        return Aggregation::Max;
    }
    throw InvalidParameter("unknown aggregation '" + name + "'");
}

TimeSeries time_bin_aggregate(const TimeSeries& y, std::int64_t n_bins, Aggregation agg) {
    if (n_bins < 1) {
        throw InvalidParameter("n_bins must be >= 1");
    }
    if (static_cast<std::size_t>(n_bins) > y.size()) {
        throw TooManyBins("cannot form " + std::to_string(n_bins) + " bins from " +
                          std::to_string(y.size()) + " observations");
    }
    const std::size_t bins = static_cast<std::size_t>(n_bins);
    const std::size_t base = y.size() / bins;
    const std::size_t remainder = y.size() % bins;

    std::vector<TimePoint> times;
    std::vector<double> values;
    times.reserve(bins);
    values.reserve(bins);
    std::size_t start = 0;
    for (std::size_t b = 0; b < bins; ++b) {
        const std::size_t count = base + (b < remainder ? 1 : 0);
        times.push_back(y.time_at(start));
        values.push_back(
            aggregate(std::span<const double>(y.values().data() + start, count), agg));
        start += count;
    }
    return TimeSeries(TimeIndex(std::move(times)), std::move(values));
}

}  // namespace tsml::transform
