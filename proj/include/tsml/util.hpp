#pragma once

#include <span>
#include <string>

namespace tsml {

double mean_of(std::span<const double> values);

/// Sample standard deviation (n - 1 denominator); needs n >= 2.
double sample_std(std::span<const double> values);

/// Least-squares slope of values against positions 0..n-1; needs n >= 2.
double slope_of(std::span<const double> values);

double min_of(std::span<const double> values);
double max_of(std::span<const double> values);

/// Middle element, or the mean of the two middle elements for even n.
double median_of(std::span<const double> values);

/// 17 significant digits, enough to round-trip a double; NaN renders as "nan".
std::string format_double(double v);

}  // namespace tsml
