#include "tsml/compose/split.hpp"

#include <string>

#include "tsml/errors.hpp"

namespace tsml::compose {

std::vector<Fold> temporal_split(std::size_t n, const SplitSpec& spec) {
    if (spec.initial_window < 1) {
        throw InvalidParameter("initial_window must be >= 1");
    }
    if (spec.step < 1) {
        throw InvalidParameter("step must be >= 1");
    }
    if (spec.fh_length < 1) {
        throw InvalidParameter("fh_length must be >= 1");
    }
    const std::size_t w0 = static_cast<std::size_t>(spec.initial_window);
    const std::size_t step = static_cast<std::size_t>(spec.step);
    const std::size_t fh = static_cast<std::size_t>(spec.fh_length);
    if (w0 + fh > n) {
        throw SeriesTooShort("initial window " + std::to_string(w0) + " plus horizon " +
                             std::to_string(fh) + " exceeds the " + std::to_string(n) +
                             " observations");
    }

    std::vector<Fold> folds;
    for (std::size_t k = 0;; ++k) {
        const std::size_t train_end = w0 + k * step;
        if (train_end + fh > n) {
            break;
        }
        const std::size_t train_begin = spec.method == SplitMethod::Sliding ? k * step : 0;

        Fold fold;
        fold.train.reserve(train_end - train_begin);
        for (std::size_t i = train_begin; i < train_end; ++i) {
            fold.train.push_back(i);
        }
        fold.test.reserve(fh);
        for (std::size_t i = train_end; i < train_end + fh; ++i) {
            fold.test.push_back(i);
        }
        folds.push_back(std::move(fold));
    }
    return folds;
}

}  // namespace tsml::compose
