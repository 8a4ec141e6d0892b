#include "tsml/transform/summary.hpp"

#include "tsml/errors.hpp"
#include "tsml/util.hpp"

namespace tsml::transform {

std::string feature_name(SummaryFeature feature) {
    switch (feature) {
        case SummaryFeature::Mean:
            return "mean";
        case SummaryFeature::Std:
            return "std";
        case SummaryFeature::Slope:
            return "slope";
        case SummaryFeature::Min:
            return "min";
        case SummaryFeature::Max:
            return "max";
        case SummaryFeature::Median:
            return "median";
    }
    throw InvalidParameter("unknown summary feature");
}

SummaryFeature feature_from_name(const std::string& name) {
    if (name == "mean") {
        return SummaryFeature::Mean;
    }
    if (name == "std") {
        return SummaryFeature::Std;
    }
    if (name == "slope") {
        return SummaryFeature::Slope;
    }
    if (name == "min") {
        return SummaryFeature::Min;
    }
    if (name == "max") {
        return SummaryFeature::Max;
    }
    if (name == "median") {
        return SummaryFeature::Median;
    }
    throw InvalidParameter("unknown summary feature '" + name + "'");
}

std::vector<double> extract_summary_features(const TimeSeries& y,
                                             const std::vector<SummaryFeature>& features) {
    std::vector<double> out;
    out.reserve(features.size());
    for (SummaryFeature feature : features) {
        switch (feature) {
            case SummaryFeature::Mean:
                out.push_back(mean_of(y.values()));
                break;
            case SummaryFeature::Std:
                out.push_back(sample_std(y.values()));
                break;
            case SummaryFeature::Slope:
                out.push_back(slope_of(y.values()));
                break;
            case SummaryFeature::Min:
                out.push_back(min_of(y.values()));
                break;
            case SummaryFeature::Max:
                out.push_back(max_of(y.values()));
                break;
            case SummaryFeature::Median:
                out.push_back(median_of(y.values()));
                break;
        }
    }
    return out;
}

}  // namespace tsml::transform
