#include "tsml/estimator.hpp"

namespace tsml {

ParamMap Estimator::get_params() const {
    ParamMap out = own_params();
    for (const auto& [name, component] : components()) {
        for (const auto& [key, value] : component->get_params()) {
            out.emplace(name + "__" + key, value);
        }
    }
    return out;
}

void Estimator::set_params(const ParamMap& updates) {
    for (const auto& [path, value] : updates) {
        const std::size_t sep = path.find("__");
        if (sep == std::string::npos) {
            apply_param(path, value);
        } else {
            const std::string head = path.substr(0, sep);
            const std::string rest = path.substr(sep + 2);
            Estimator* target = nullptr;
            for (const auto& [name, component] : components()) {
                if (name == head) {
                    target = component;
                    break;
                }
            }
            if (target == nullptr) {
                throw UnknownParameter("unknown parameter path '" + path + "'");
            }
            target->set_params({{rest, value}});
        }
    }
    clear_fitted();
}

void Estimator::apply_param(const std::string& name, const ParamValue& /*value*/) {
    throw UnknownParameter("unknown parameter '" + name + "'");
}

void Estimator::require_fitted() const {
    if (!fitted_) {
        throw NotFitted("estimator is not fitted; call fit first");
    }
}

}  // namespace tsml
