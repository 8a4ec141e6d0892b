#pragma once

#include <cstdint>
#include <vector>

namespace tsml::compose {

enum class SplitMethod { Expanding, Sliding };

/**
 * @brief Temporal cross-validation layout: fold k trains on
 *        [0, w0 + k*step) (expanding) or [k*step, w0 + k*step) (sliding) and
 *        tests on the next fh_length positions.
 */
struct SplitSpec {
    SplitMethod method = SplitMethod::Expanding;
    std::int64_t initial_window = 1;
    std::int64_t step = 1;
    std::int64_t fh_length = 1;
};

struct Fold {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;

    bool operator==(const Fold& other) const = default;
};

/// Folds are emitted while the test window still fits inside n; every train
/// position precedes every test position.
std::vector<Fold> temporal_split(std::size_t n, const SplitSpec& spec);

}  // namespace tsml::compose
