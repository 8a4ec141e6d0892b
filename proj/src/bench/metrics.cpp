#include "tsml/bench/metrics.hpp"

#include <cmath>

#include "tsml/errors.hpp"

namespace tsml::bench {

namespace {

void require_paired(std::size_t actual, std::size_t predicted) {
    if (actual != predicted) {
        throw LengthMismatch("got " + std::to_string(actual) + " actual values but " +
                             std::to_string(predicted) + " predictions");
    }
    if (actual == 0) {
        throw EmptyInput("nothing to score");
    }
}

}  // namespace

double smape(std::span<const double> actual, std::span<const double> predicted) {
    require_paired(actual.size(), predicted.size());
    double total = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double denominator = std::abs(actual[i]) + std::abs(predicted[i]);
        if (denominator != 0.0) {
            total += std::abs(actual[i] - predicted[i]) / denominator;
        }
    }
    return 200.0 * total / static_cast<double>(actual.size());
}

double mase(std::span<const double> actual, std::span<const double> predicted,
            std::span<const double> train) {
    require_paired(actual.size(), predicted.size());
    if (train.size() < 2) {
        throw SeriesTooShort("scaling needs a training series of at least 2 values");
    }
    double naive = 0.0;
    for (std::size_t t = 1; t < train.size(); ++t) {
        naive += std::abs(train[t] - train[t - 1]);
    }
    naive /= static_cast<double>(train.size() - 1);
    if (naive == 0.0) {
        throw ZeroDenominator("constant training series has no naive error to scale by");
    }

    double total = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        total += std::abs(actual[i] - predicted[i]);
    }
    return total / static_cast<double>(actual.size()) / naive;
}

double rmse(std::span<const double> actual, std::span<const double> predicted) {
    require_paired(actual.size(), predicted.size());
    double total = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double error = actual[i] - predicted[i];
        total += error * error;
    }
    return std::sqrt(total / static_cast<double>(actual.size()));
}

double accuracy(const std::vector<std::string>& actual,
                const std::vector<std::string>& predicted) {
    require_paired(actual.size(), predicted.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == predicted[i]) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(actual.size());
}

}  // namespace tsml::bench
