#include "tsml/params.hpp"

#include <cstdio>

#include "tsml/errors.hpp"

namespace tsml {

double as_double(const ParamValue& v, const std::string& name) {
    if (const double* d = std::get_if<double>(&v)) {
        return *d;
    }
    if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) {
        return static_cast<double>(*i);
    }
    throw TypeMismatch("parameter '" + name + "' expects a real number");
}

std::int64_t as_int(const ParamValue& v, const std::string& name) {
    if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) {
        return *i;
    }
    throw TypeMismatch("parameter '" + name + "' expects an integer");
}

bool as_bool(const ParamValue& v, const std::string& name) {
    if (const bool* b = std::get_if<bool>(&v)) {
        return *b;
    }
    throw TypeMismatch("parameter '" + name + "' expects a boolean");
}

std::string as_string(const ParamValue& v, const std::string& name) {
    if (const std::string* s = std::get_if<std::string>(&v)) {
        return *s;
    }
    throw TypeMismatch("parameter '" + name + "' expects a string");
}

bool param_values_equal(const ParamValue& a, const ParamValue& b) {
    return a == b;
}

std::string param_to_string(const ParamValue& v) {
    if (const bool* b = std::get_if<bool>(&v)) {
        return *b ? "true" : "false";
    }
    if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) {
        return std::to_string(*i);
    }
    if (const double* d = std::get_if<double>(&v)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", *d);
        return buf;
    }
    return std::get<std::string>(v);
}

}  // namespace tsml
