#pragma once

#include <span>
#include <vector>

#include "tsml/matrix.hpp"

namespace tsml::bench {

/// Ranks with 1 for the smallest value; tied values share the average of the
/// positions they occupy.
std::vector<double> average_ranks(std::span<const double> values);

/// Mean rank per row of a loss table (rows are strategies, columns are
/// datasets); each dataset ranks the strategies, lowest loss first.
std::vector<double> mean_ranks(const Matrix& losses);

/// Friedman chi-square statistic over a complete loss table with one row per
/// strategy and one column per dataset. Needs at least 2 of each.
double friedman_statistic(const Matrix& losses);

/// Exact two-sided binomial sign test on paired per-dataset losses; equal
/// pairs are dropped, and every pair equal is an error.
double sign_test_p(std::span<const double> losses_a, std::span<const double> losses_b);

}  // namespace tsml::bench
