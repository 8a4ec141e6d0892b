#include "tsml/horizon.hpp"

#include <string>

#include "tsml/errors.hpp"

namespace tsml {

ForecastingHorizon ForecastingHorizon::relative(std::vector<std::int64_t> steps) {
    if (steps.empty()) {
        throw EmptyInput("horizon must not be empty");
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] < 1) {
            throw HorizonNotInFuture("relative horizon steps must be >= 1");
        }
        if (i > 0 && steps[i] <= steps[i - 1]) {
            throw InvalidParameter("horizon steps must be strictly increasing");
        }
    }
    ForecastingHorizon fh;
    fh.relative_ = true;
    fh.steps_ = std::move(steps);
    return fh;
}

ForecastingHorizon ForecastingHorizon::absolute(std::vector<TimePoint> points) {
    if (points.empty()) {
        throw EmptyInput("horizon must not be empty");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i] <= points[i - 1]) {
            throw InvalidParameter("horizon points must be strictly increasing");
        }
    }
    ForecastingHorizon fh;
    fh.relative_ = false;
    fh.points_ = std::move(points);
    return fh;
}

std::size_t ForecastingHorizon::size() const {
    return relative_ ? steps_.size() : points_.size();
}

const std::vector<std::int64_t>& ForecastingHorizon::steps() const {
    if (!relative_) {
        throw TypeMismatch("absolute horizon has no relative steps");
    }
    return steps_;
}

const std::vector<TimePoint>& ForecastingHorizon::points() const {
    if (relative_) {
        throw TypeMismatch("relative horizon has no absolute points");
    }
    return points_;
}

std::vector<TimePoint> ForecastingHorizon::to_absolute(TimePoint cutoff,
                                                       TimePoint resolution) const {
    std::vector<TimePoint> out;
    if (relative_) {
        out.reserve(steps_.size());
        for (std::int64_t s : steps_) {
            out.push_back(cutoff + s * resolution);
        }
        return out;
    }
    for (TimePoint p : points_) {
        if (p <= cutoff) {
            throw HorizonNotInFuture("horizon point " + std::to_string(p) +
                                     " is not after the cutoff " + std::to_string(cutoff));
        }
    }
    return points_;
}

std::vector<std::int64_t> ForecastingHorizon::to_relative(TimePoint cutoff,
                                                          TimePoint resolution) const {
    if (relative_) {
        return steps_;
    }
    std::vector<std::int64_t> out;
    out.reserve(points_.size());
    for (TimePoint p : points_) {
        if (p <= cutoff) {
            throw HorizonNotInFuture("horizon point " + std::to_string(p) +
                                     " is not after the cutoff " + std::to_string(cutoff));
        }
        const TimePoint offset = p - cutoff;
        if (offset % resolution != 0) {
            throw MisalignedHorizon("horizon point " + std::to_string(p) +
                                    " does not land on the training grid (cutoff " +
                                    std::to_string(cutoff) + ", resolution " +
                                    std::to_string(resolution) + ")");
        }
        out.push_back(offset / resolution);
    }
    return out;
}

}  // namespace tsml
