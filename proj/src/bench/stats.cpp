#include "tsml/bench/stats.hpp"

#include <cmath>
#include <string>

#include "tsml/errors.hpp"

namespace tsml::bench {

std::vector<double> average_ranks(std::span<const double> values) {
    if (values.empty()) {
        throw EmptyInput("nothing to rank");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw NonFiniteValue("ranks are undefined for non-finite values");
        }
    }
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::size_t below = 0;
        std::size_t tied = 0;
        for (std::size_t j = 0; j < values.size(); ++j) {
            below += values[j] < values[i];
            tied += values[j] == values[i];
        }
        // Tied values occupy positions below+1 .. below+tied; share their mean.
        ranks[i] = static_cast<double>(below) + (static_cast<double>(tied) + 1.0) / 2.0;
    }
    return ranks;
}

std::vector<double> mean_ranks(const Matrix& losses) {
    const std::size_t k = losses.rows();
    const std::size_t n = losses.cols();
    std::vector<double> totals(k, 0.0);
    std::vector<double> column(k);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            column[i] = losses.at(i, j);
        }
        const std::vector<double> ranks = average_ranks(column);
        for (std::size_t i = 0; i < k; ++i) {
            totals[i] += ranks[i];
        }
    }
    for (double& total : totals) {
        total /= static_cast<double>(n);
    }
    return totals;
}

double friedman_statistic(const Matrix& losses) {
    const std::size_t k = losses.rows();
    const std::size_t n = losses.cols();
    if (k < 2) {
        throw InvalidParameter("comparing ranks needs at least 2 strategies, got " +
                               std::to_string(k));
    }
    if (n < 2) {
        throw InvalidParameter("comparing ranks needs at least 2 datasets, got " +
                               std::to_string(n));
    }
    const std::vector<double> means = mean_ranks(losses);
    double sum_squares = 0.0;
    for (double mean : means) {
        sum_squares += mean * mean;
    }
    const double dk = static_cast<double>(k);
    const double dn = static_cast<double>(n);
    return 12.0 * dn / (dk * (dk + 1.0)) * (sum_squares - dk * (dk + 1.0) * (dk + 1.0) / 4.0);
}

double sign_test_p(std::span<const double> losses_a, std::span<const double> losses_b) {
    if (losses_a.size() != losses_b.size()) {
        throw LengthMismatch("paired comparison needs equal-length loss vectors");
    }
    if (losses_a.empty()) {
        throw EmptyInput("no paired losses to compare");
    }
    std::size_t wins_a = 0;
    std::size_t wins_b = 0;
    for (std::size_t i = 0; i < losses_a.size(); ++i) {
        if (!std::isfinite(losses_a[i]) || !std::isfinite(losses_b[i])) {
            throw NonFiniteValue("paired losses must be finite");
        }
        wins_a += losses_a[i] < losses_b[i];
        wins_b += losses_b[i] < losses_a[i];
    }
    const std::size_t decisive = wins_a + wins_b;
    if (decisive == 0) {
        throw AllTies("the strategies never differ");
    }

    // P(X <= min wins) for X ~ Binomial(decisive, 1/2), exact in doubles at
    // desk scale.
    const std::size_t low = std::min(wins_a, wins_b);
    double tail = 0.0;
    double coefficient = 1.0;
    for (std::size_t i = 0; i <= low; ++i) {
        tail += std::ldexp(coefficient, -static_cast<int>(decisive));
        coefficient = coefficient * static_cast<double>(decisive - i) /
                      static_cast<double>(i + 1);
    }
    return 2.0 * std::min(tail, 0.5);
}

}  // namespace tsml::bench
