#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tsml::distance {

enum class DistanceKind { Euclidean, Dtw, Ddtw, Wdtw };

std::string distance_kind_name(DistanceKind kind);
DistanceKind distance_kind_from_name(const std::string& name);

/**
 * @brief Selects and configures one elastic distance: an optional Sakoe-Chiba
 *        band fraction for the DTW family and a weight steepness g for WDTW.
 */
struct DistanceSpec {
    DistanceKind kind = DistanceKind::Dtw;
    std::optional<double> band;
    double g = 0.0;

    static DistanceSpec euclidean();
    static DistanceSpec dtw(std::optional<double> band = std::nullopt);
    static DistanceSpec ddtw(std::optional<double> band = std::nullopt);
    static DistanceSpec wdtw(double g);

    bool operator==(const DistanceSpec& other) const = default;
};

/// sqrt of the summed squared differences; lengths must match.
double euclidean_distance(std::span<const double> x, std::span<const double> y);

/// Accumulated squared-difference alignment cost (no final square root).
/// The band restricts alignments to |i - j| <= ceil(band * max(m, n)).
double dtw_distance(std::span<const double> x, std::span<const double> y,
                    std::optional<double> band = std::nullopt);

/// Centered first differences with endpoints copied from their neighbors;
/// needs at least 3 observations.
std::vector<double> derivative_transform(std::span<const double> values);

/// dtw_distance over the derivative transforms of both inputs.
double ddtw_distance(std::span<const double> x, std::span<const double> y,
                     std::optional<double> band = std::nullopt);

/// DTW with each squared difference scaled by the sigmoid weight
/// 1 / (1 + exp(-g * (|i - j| - L/2))), L = max(m, n); g = 0 halves
/// every cost.
double wdtw_distance(std::span<const double> x, std::span<const double> y, double g);

/// Dispatch on the DistanceSpec kind; validates band and g ranges.
double compute_distance(std::span<const double> x, std::span<const double> y,
                        const DistanceSpec& spec);

}  // namespace tsml::distance
