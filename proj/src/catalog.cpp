#include "hyptrig/catalog.hpp"

#include <cmath>
#include <utility>

namespace hyptrig {

namespace {

// Probe grid for the sup-norm invariant: 100 x 100 points covering a wide
// box in (x, log y).
void probe_sup_norm(const std::function<double(const Point&)>& fn, double sup_norm,
                    const std::string& name) {
    constexpr int kN = 100;
    for (int i = 0; i < kN; ++i) {
        const double x = -20.0 + 40.0 * i / (kN - 1);
        for (int j = 0; j < kN; ++j) {
            const double y = std::exp(-10.0 + 20.0 * j / (kN - 1));
            if (std::abs(fn(Point(x, y))) > sup_norm * (1.0 + 1e-12) + 1e-300)
                throw InvalidFunctionSpec("FunctionSpec '" + name +
                                          "': probe grid exceeds declared sup_norm");
        }
    }
}

}  // namespace

FunctionSpec::FunctionSpec(FunctionKind kind, std::string name, std::vector<double> params,
                           std::function<double(const Point&)> fn, double sup_norm,
                           std::optional<double> decay_exponent, double tail_constant,
                           Support support, bool run_probe)
    : kind_(kind),
      name_(std::move(name)),
      params_(std::move(params)),
      fn_(std::move(fn)),
      sup_norm_(sup_norm),
      decay_exponent_(decay_exponent),
      tail_constant_(tail_constant),
      support_(support) {
    if (run_probe) probe_sup_norm(fn_, sup_norm_, name_);
}

FunctionSpec FunctionSpec::constant(double c) {
    return FunctionSpec(FunctionKind::constant, "constant", {c},
                        [c](const Point&) { return c; }, std::abs(c), 0.0, std::abs(c),
                        Support::whole_plane, true);
}

FunctionSpec FunctionSpec::odd_in_x() {
    return FunctionSpec(FunctionKind::odd_in_x, "odd_in_x", {},
                        [](const Point& z) { return z.x / (1.0 + z.x * z.x); }, 0.5, 0.0, 0.5,
                        Support::whole_plane, true);
}

FunctionSpec FunctionSpec::dilation_invariant() {
    return FunctionSpec(FunctionKind::dilation_invariant, "dilation_invariant", {},
                        [](const Point& z) {
                            const double r = z.x / z.y;
                            return std::exp(-r * r);
                        },
                        1.0, 0.0, 1.0, Support::whole_plane, true);
}

FunctionSpec FunctionSpec::gaussian_bump(double x0, double y0) {
    const Point center(x0, y0);
    // d(z, z0) >= |log(y/y0)| makes min{y,1/y}^2 admissible with this constant.
    const double tail_c = std::exp(1.0 + 2.0 * std::abs(std::log(y0)));
    return FunctionSpec(FunctionKind::gaussian_bump, "gaussian_bump", {x0, y0},
                        [center](const Point& z) {
                            const double d = hyperbolic_distance(z, center);
                            return std::exp(-d * d);
                        },
                        1.0, 2.0, tail_c, Support::whole_plane, true);
}

FunctionSpec FunctionSpec::plane_wave_real_part(double mu, double b) {
    const BoundaryPoint bp = BoundaryPoint::finite(b);
    return FunctionSpec(FunctionKind::plane_wave_real_part, "plane_wave_real_part", {mu, b},
                        [mu, bp](const Point& z) { return std::cos(mu * busemann(z, bp)); }, 1.0,
                        0.0, 1.0, Support::whole_plane, true);
}

FunctionSpec FunctionSpec::indicator_T0() {
    return FunctionSpec(FunctionKind::custom, "indicator_T0", {},
                        [](const Point& z) {
                            if (z.x <= -1.0 || z.x >= 1.0) return 0.0;
                            return z.y * z.y > 1.0 - z.x * z.x ? 1.0 : 0.0;
                        },
                        1.0, 0.0, 1.0, Support::standard_triangle, true);
}

FunctionSpec FunctionSpec::custom(std::string name, std::function<double(const Point&)> fn,
                                  double sup_norm, std::optional<double> decay_exponent,
                                  Support support) {
    return FunctionSpec(FunctionKind::custom, std::move(name), {}, std::move(fn), sup_norm,
                        decay_exponent, sup_norm, support, true);
}

FunctionSpec FunctionSpec::precompose(const MobiusTransform& m) const {
    auto inner = fn_;
    return FunctionSpec(FunctionKind::custom, name_ + "∘m", params_,
                        [inner, m](const Point& z) { return inner(mobius_apply(m, z)); },
                        sup_norm_, std::nullopt, sup_norm_, Support::whole_plane, false);
}

std::optional<FunctionSpec> FunctionSpec::by_name(const std::string& name,
                                                  const std::vector<double>& params) {
    auto param = [&params](size_t i, double fallback) {
        return i < params.size() ? params[i] : fallback;
    };
    if (name == "constant") return constant(param(0, 1.0));
    if (name == "odd_in_x") return odd_in_x();
    if (name == "dilation_invariant") return dilation_invariant();
    if (name == "gaussian_bump") return gaussian_bump(param(0, 0.3), param(1, 1.2));
    if (name == "plane_wave_real_part") return plane_wave_real_part(param(0, 1.0), param(1, 0.0));
    return std::nullopt;
}

}  // namespace hyptrig
