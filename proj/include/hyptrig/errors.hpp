#pragma once

#include <stdexcept>
#include <string>

namespace hyptrig {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Möbius coefficients with ad - bc <= 0 or numerically singular.
struct SingularTransform : Error {
    using Error::Error;
};

/// A triple of boundary points contains a repeated entry.
struct DegenerateTriple : Error {
    using Error::Error;
};

/// mobius_to_standard_triple was handed a negatively oriented triple.
struct NegativelyOriented : Error {
    using Error::Error;
};

/// Triangle vertices coincide or lie on a common geodesic.
struct DegenerateTriangle : Error {
    using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget before converging.
struct MaxDepthExceeded : Error {
    double value_re = 0.0;
    double value_im = 0.0;
    double error_estimate = 0.0;
    explicit MaxDepthExceeded(const std::string& msg) : Error(msg) {}
};

/// The declared tail exponent makes the truncation error unbounded.
struct TailDivergent : Error {
    using Error::Error;
};

/// Gamma function evaluated at (or too close to) a nonpositive integer.
struct PoleAtNonpositiveInteger : Error {
    using Error::Error;
};

/// Spectral parameter outside the half-plane Re(s) > -1.
struct OutsideP : Error {
    using Error::Error;
};

/// Frequency outside its declared strip |Im(lambda)| <= 1 + eps.
struct OutsideStrip : Error {
    using Error::Error;
};

/// F(s, b) requested at one of the excluded boundary parameters b = +-1.
struct BadBoundaryParameter : Error {
    using Error::Error;
};

/// FunctionSpec lacks the support/decay metadata required by the operation.
struct UnsupportedFunction : Error {
    using Error::Error;
};

/// Declared sup-norm bound is violated on the construction probe grid.
struct InvalidFunctionSpec : Error {
    using Error::Error;
};

/// Invariance check requested for a function that fails the probe f(gz) = f(z).
struct NotInvariant : Error {
    using Error::Error;
};

/// Batch operation received an empty input list.
struct EmptyInput : Error {
    using Error::Error;
};

}  // namespace hyptrig
