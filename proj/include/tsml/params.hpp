#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace tsml {

using ParamValue = std::variant<bool, std::int64_t, double, std::string>;

/// Lexicographic key order; nested components appear as "<component>__<param>".
using ParamMap = std::map<std::string, ParamValue>;

/// Coercions used when applying a ParamValue to a typed field. Integers widen
/// to double; everything else must match exactly. Throw TypeMismatch.
double as_double(const ParamValue& v, const std::string& name);
std::int64_t as_int(const ParamValue& v, const std::string& name);
bool as_bool(const ParamValue& v, const std::string& name);
std::string as_string(const ParamValue& v, const std::string& name);

bool param_values_equal(const ParamValue& a, const ParamValue& b);

/// Renders a value for messages and CSV cells; doubles use 17 significant digits.
std::string param_to_string(const ParamValue& v);

}  // namespace tsml
