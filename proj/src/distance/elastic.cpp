#include "tsml/distance/elastic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "tsml/errors.hpp"

namespace tsml::distance {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_non_empty(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) {
        throw EmptySeries("distance inputs must be non-empty");
    }
}

void check_band(const std::optional<double>& band) {
    if (band && (*band < 0.0 || *band > 1.0 || !std::isfinite(*band))) {
        throw InvalidParameter("band fraction must lie in [0, 1]");
    }
}

/// Shared DP: weight(i, j) scales the squared difference of x[i] and y[j].
template <typename WeightFn>
double alignment_cost(std::span<const double> x, std::span<const double> y,
                      std::optional<std::size_t> window, WeightFn weight) {
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    std::vector<std::vector<double>> cost(m + 1, std::vector<double>(n + 1, kInf));
    cost[0][0] = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (window) {
                const std::size_t lo = std::min(i - 1, j - 1);
                const std::size_t hi = std::max(i - 1, j - 1);
                if (hi - lo > *window) {
                    continue;
                }
            }
            const double best =
                std::min({cost[i - 1][j - 1], cost[i - 1][j], cost[i][j - 1]});
            if (best == kInf) {
                continue;
            }
            const double diff = x[i - 1] - y[j - 1];
            cost[i][j] = best + weight(i - 1, j - 1) * diff * diff;
        }
    }
    return cost[m][n];
}

double banded_dtw(std::span<const double> x, std::span<const double> y,
                  const std::optional<double>& band) {
    require_non_empty(x, y);
    check_band(band);
    std::optional<std::size_t> window;
    if (band) {
        const double longer = static_cast<double>(std::max(x.size(), y.size()));
        window = static_cast<std::size_t>(std::ceil(*band * longer));
        const std::size_t gap =
            x.size() > y.size() ? x.size() - y.size() : y.size() - x.size();
        if (gap > *window) {
            throw BandTooNarrow("band window " + std::to_string(*window) +
                                " admits no alignment of lengths " + std::to_string(x.size()) +
                                " and " + std::to_string(y.size()));
        }
    }
    return alignment_cost(x, y, window, [](std::size_t, std::size_t) { return 1.0; });
}

}  // namespace

std::string distance_kind_name(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::Euclidean:
            return "euclidean";
        case DistanceKind::Dtw:
            return "dtw";
        case DistanceKind::Ddtw:
            return "ddtw";
        case DistanceKind::Wdtw:
            return "wdtw";
    }
    throw InvalidParameter("unknown distance kind");
}

DistanceKind distance_kind_from_name(const std::string& name) {
    if (name == "euclidean") {
        return DistanceKind::Euclidean;
    }
    if (name == "dtw") {
        return DistanceKind::Dtw;
    }
    if (name == "ddtw") {
        return DistanceKind::Ddtw;
    }
    if (name == "wdtw") {
        return DistanceKind::Wdtw;
    }
    throw InvalidParameter("unknown distance '" + name + "'");
}

DistanceSpec DistanceSpec::euclidean() { return {DistanceKind::Euclidean, std::nullopt, 0.0}; }

DistanceSpec DistanceSpec::dtw(std::optional<double> band) {
    check_band(band);
    return {DistanceKind::Dtw, band, 0.0};
}

DistanceSpec DistanceSpec::ddtw(std::optional<double> band) {
    check_band(band);
    return {DistanceKind::Ddtw, band, 0.0};
}

DistanceSpec DistanceSpec::wdtw(double g) {
    if (g < 0.0 || !std::isfinite(g)) {
        throw InvalidParameter("g must be >= 0");
    }
    return {DistanceKind::Wdtw, std::nullopt, g};
}

double euclidean_distance(std::span<const double> x, std::span<const double> y) {
    require_non_empty(x, y);
    if (x.size() != y.size()) {
        throw LengthMismatch("euclidean distance needs equal lengths, got " +
                             std::to_string(x.size()) + " and " + std::to_string(y.size()));
    }
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double diff = x[i] - y[i];
        total += diff * diff;
    }
    return std::sqrt(total);
}

double dtw_distance(std::span<const double> x, std::span<const double> y,
                    std::optional<double> band) {
    return banded_dtw(x, y, band);
}

std::vector<double> derivative_transform(std::span<const double> values) {
    if (values.size() < 3) {
        throw SeriesTooShort("derivative transform needs at least 3 observations, got " +
                             std::to_string(values.size()));
    }
    std::vector<double> d(values.size());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        d[i] = ((values[i] - values[i - 1]) + (values[i + 1] - values[i - 1]) / 2.0) / 2.0;
    }
    d.front() = d[1];
    d.back() = d[values.size() - 2];
    return d;
}

double ddtw_distance(std::span<const double> x, std::span<const double> y,
                     std::optional<double> band) {
    const std::vector<double> dx = derivative_transform(x);
    const std::vector<double> dy = derivative_transform(y);
    return banded_dtw(dx, dy, band);
}

double wdtw_distance(std::span<const double> x, std::span<const double> y, double g) {
    require_non_empty(x, y);
    if (g < 0.0 || !std::isfinite(g)) {
        throw InvalidParameter("g must be >= 0");
    }
    const double half_span = static_cast<double>(std::max(x.size(), y.size())) / 2.0;
    const auto weight = [g, half_span](std::size_t i, std::size_t j) {
        const double lag = i > j ? static_cast<double>(i - j) : static_cast<double>(j - i);
        return 1.0 / (1.0 + std::exp(-g * (lag - half_span)));
    };
    return alignment_cost(x, y, std::nullopt, weight);
}

double compute_distance(std::span<const double> x, std::span<const double> y,
                        const DistanceSpec& spec) {
    switch (spec.kind) {
        case DistanceKind::Euclidean:
            return euclidean_distance(x, y);
        case DistanceKind::Dtw:
            return dtw_distance(x, y, spec.band);
        case DistanceKind::Ddtw:
            return ddtw_distance(x, y, spec.band);
        case DistanceKind::Wdtw:
            return wdtw_distance(x, y, spec.g);
    }
    throw InvalidParameter("unknown distance kind");
}

}  // namespace tsml::distance
