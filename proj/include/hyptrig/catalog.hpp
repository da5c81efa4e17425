#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyptrig/geometry.hpp"

namespace hyptrig {

enum class FunctionKind {
    constant,
    odd_in_x,
    dilation_invariant,
    gaussian_bump,
    plane_wave_real_part,
    custom,
};

enum class Support {
    whole_plane,
    standard_triangle,  // supported inside T_0 only
};

/// A named bounded test function on the hyperbolic plane together with the
/// metadata the integrators need: a sup-norm bound (checked against a probe
/// grid at construction) and optional decay data for unbounded-domain tails.
class FunctionSpec {
  public:
    static FunctionSpec constant(double c);
    /// x / (1 + x^2): bounded, odd under x -> -x for every height y.
    static FunctionSpec odd_in_x();
    /// exp(-(x/y)^2): a bounded function of x/y, invariant under dilations.
    static FunctionSpec dilation_invariant();
    /// exp(-d(z, z0)^2) with default center (0.3, 1.2).
    static FunctionSpec gaussian_bump(double x0 = 0.3, double y0 = 1.2);
    /// cos(mu <z, b>): real part of the unit-modulus plane wave at lambda = mu + i.
    static FunctionSpec plane_wave_real_part(double mu, double b);
    /// Indicator of the standard ideal triangle T_0.
    static FunctionSpec indicator_T0();
    static FunctionSpec custom(std::string name, std::function<double(const Point&)> fn,
                               double sup_norm,
                               std::optional<double> decay_exponent = std::nullopt,
                               Support support = Support::whole_plane);

    double operator()(const Point& z) const { return fn_(z); }

    FunctionKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::vector<double>& params() const { return params_; }
    double sup_norm() const { return sup_norm_; }
    std::optional<double> decay_exponent() const { return decay_exponent_; }
    double tail_constant() const { return tail_constant_; }
    Support support() const { return support_; }

    /// Pullback along m: the returned spec evaluates z -> f(m(z)). The sup
    /// norm is preserved exactly, so the probe is not repeated.
    FunctionSpec precompose(const MobiusTransform& m) const;

    /// Look up a catalog entry by name ("constant", "odd_in_x",
    /// "dilation_invariant", "gaussian_bump", "plane_wave_real_part"),
    /// applying the given parameters. Returns nullopt for unknown names.
    static std::optional<FunctionSpec> by_name(const std::string& name,
                                               const std::vector<double>& params);

  private:
    FunctionSpec(FunctionKind kind, std::string name, std::vector<double> params,
                 std::function<double(const Point&)> fn, double sup_norm,
                 std::optional<double> decay_exponent, double tail_constant, Support support,
                 bool run_probe);

    FunctionKind kind_;
    std::string name_;
    std::vector<double> params_;
    std::function<double(const Point&)> fn_;
    double sup_norm_;
    std::optional<double> decay_exponent_;
    double tail_constant_;
    Support support_;
};

}  // namespace hyptrig
