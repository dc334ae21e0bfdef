#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace ccnr {

/// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible or out-of-range matrix dimensions.
struct shape_error : error {
    using error::error;
};

/// An iterative solver exceeded its sweep cap.
struct convergence_error : error {
    using error::error;
};

/// A parameter lies outside the domain of a state family or sampler.
struct domain_error : error {
    using error::error;
};

/// A file did not match the state JSON schema.
struct parse_error : error {
    using error::error;
};

enum class violation {
    not_hermitian,
    trace_not_one,
    not_psd,
    shape_mismatch,
};

namespace detail {

// "1.0" rather than "1" so a magnitude always reads as a number.
inline std::string format_magnitude(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    std::string s(buf);
    if (s.find_first_of(".einf") == std::string::npos) s += ".0";
    return s;
}

inline std::string violation_message(violation kind, double magnitude) {
    switch (kind) {
        case violation::not_hermitian: return "NotHermitian(" + format_magnitude(magnitude) + ")";
        case violation::trace_not_one: return "TraceNotOne(" + format_magnitude(magnitude) + ")";
        case violation::not_psd:       return "NotPSD(" + format_magnitude(magnitude) + ")";
        case violation::shape_mismatch: return "ShapeMismatch";
    }
    return "UnknownViolation";
}

}  // namespace detail

/// A density-matrix invariant failed; carries which one and by how much.
struct validation_error : error {
    validation_error(violation kind, double magnitude)
        : error(detail::violation_message(kind, magnitude)), kind(kind), magnitude(magnitude) {}

    violation kind;
    double magnitude;
};

}  // namespace ccnr
