#pragma once

#include <complex>
#include <functional>

#include "hyptrig/geometry.hpp"

namespace hyptrig {

/// Controls for the adaptive integrators.
///
/// tail_exponent is the decay exponent alpha in the admissibility bound
/// |f(x, y)| <= tail_constant * min{y, 1/y}^alpha on T_0; it must exceed -1
/// for the truncation error above y_cap to be finite.
struct QuadratureConfig {
    double tol = 1e-8;          // absolute quadrature error target
    int max_depth = 40;         // subdivision limit per cell lineage
    double y_cap = 1e4;         // truncation height for unbounded regions
    double tail_exponent = -1.0 + 1e-3;
    double tail_constant = 1.0;
};

struct IntegralResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;  // accumulated |coarse - fine| plus tail bound
    long long evaluations = 0;
};

using Integrand = std::function<std::complex<double>(const Point&)>;
using Integrand1D = std::function<std::complex<double>(double)>;

/// Adaptive Gauss-Kronrod (G7, K15) on a finite interval. Splits the worst
/// interval until the accumulated error estimate drops below tol; endpoint
/// singularities integrable like t^a, a > -1, are handled by the geometric
/// cascade of bisections toward the endpoint.
IntegralResult integrate_interval(const Integrand1D& f, double a, double b, double tol,
                                  int max_intervals = 20000);

/// Integral of f dA over the standard ideal triangle
/// T_0 = {-1 < x < 1, y > sqrt(1 - x^2)}, truncated at height y_cap with the
/// analytic tail bound 2 * C * y_cap^-(alpha+1) / (alpha+1) added to the error
/// estimate. Throws TailDivergent when tail_exponent <= -1 and
/// MaxDepthExceeded when the subdivision budget runs out before reaching tol.
IntegralResult integrate_T0(const Integrand& f, const QuadratureConfig& cfg);

/// Same as integrate_T0 restricted to T_0 with x_lo <= x <= x_hi.
IntegralResult integrate_T0_region(const Integrand& f, const QuadratureConfig& cfg, double x_lo,
                                   double x_hi);

/// Truncated variant: integrates up to the cap and reports only the
/// quadrature error, performing no tail admissibility check. Intended for
/// integrands outside the decay class where only the truncated value is
/// meaningful.
IntegralResult integrate_T0_truncated(const Integrand& f, const QuadratureConfig& cfg);

/// Signed integral of f dA over the ideal triangle spanned by the triple,
/// computed by pulling back to T_0 through the standardizing isometry. The
/// sign is the orientation of the triple.
IntegralResult integrate_ideal_triangle(const Integrand& f, const IdealTriple& t,
                                        const QuadratureConfig& cfg);

/// Signed integral of f dA over the compact geodesic triangle, via the cone
/// of geodesics from p0 to the side [p1, p2]. Degenerate triangles give 0.
IntegralResult integrate_geodesic_triangle(const Integrand& f, const GeodesicTriangle& t,
                                           const QuadratureConfig& cfg);

/// Analytic bound for the omitted mass of T_0 above y = y_cap under the
/// decay declared in cfg.
double tail_bound(const QuadratureConfig& cfg, double width = 2.0);

}  // namespace hyptrig
