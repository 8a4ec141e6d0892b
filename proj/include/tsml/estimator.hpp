#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tsml/errors.hpp"
#include "tsml/params.hpp"

namespace tsml {

/**
 * @brief Common estimator contract: hyper-parameter access with nested path
 *        routing, fitted-state tracking, and unfitted cloning.
 *
 * get_params returns own parameters plus every nested component's parameters
 * under "<component>__" prefixes. set_params routes on the first "__" and
 * clears the fitted state, so a reconfigured estimator must be refit.
 */
class Estimator {
  public:
    virtual ~Estimator() = default;

    ParamMap get_params() const;

    /// Applies every entry; throws UnknownParameter when a path does not
    /// resolve and TypeMismatch on a wrongly typed value.
    void set_params(const ParamMap& updates);

    bool is_fitted() const { return fitted_; }

    virtual std::unique_ptr<Estimator> clone_unfitted() const = 0;

  protected:
    /// Parameters owned directly by this estimator, unprefixed.
    virtual ParamMap own_params() const { return {}; }

    /// Applies one own (unprefixed) parameter; throws UnknownParameter for
    /// names this estimator does not define.
    virtual void apply_param(const std::string& name, const ParamValue& value);

    /// Named nested components whose parameters surface under "<name>__".
    virtual std::vector<std::pair<std::string, const Estimator*>> components() const { return {}; }
    virtual std::vector<std::pair<std::string, Estimator*>> components() { return {}; }

    void mark_fitted() { fitted_ = true; }
    void clear_fitted() { fitted_ = false; }

    /// Throws NotFitted unless fit has completed.
    void require_fitted() const;

  private:
    bool fitted_ = false;
};

/// clone_unfitted with the concrete type preserved.
template <typename T>
std::unique_ptr<T> clone_as(const T& estimator) {
    std::unique_ptr<Estimator> base = estimator.clone_unfitted();
    T* raw = dynamic_cast<T*>(base.get());
    if (raw == nullptr) {
        throw TypeMismatch("clone does not match the source type");
    }
    base.release();
    return std::unique_ptr<T>(raw);
}

}  // namespace tsml
