#pragma once

#include <optional>
#include <vector>

namespace tsml::linalg {

/// Gaussian elimination with partial pivoting; nullopt when a pivot falls
/// below 1e-12 times the largest initial entry (treated as rank deficiency).
std::optional<std::vector<double>> solve(std::vector<std::vector<double>> a,
                                         std::vector<double> b);

/// Least-squares coefficients for the given design rows (one coefficient per
/// design column) via normal equations. On rank deficiency falls back to a
/// 1e-8 ridge refined iteratively against the unregularized system, which
/// converges to the minimum-norm solution. Throws DegenerateFit when the
/// result is non-finite.
std::vector<double> least_squares(const std::vector<std::vector<double>>& rows,
                                  const std::vector<double>& y);

}  // namespace tsml::linalg
