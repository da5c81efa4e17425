#pragma once

#include <array>
#include <vector>

#include "hyptrig/catalog.hpp"
#include "hyptrig/geometry.hpp"
#include "hyptrig/quadrature.hpp"

namespace hyptrig {

/// Finitely many group elements, e.g. generators and short words of a
/// Fuchsian group.
struct IsometrySample {
    std::vector<MobiusTransform> elements;

    /// Words of length <= max_word_length in the cyclic group generated by
    /// z -> 2z (hyperbolic element fixing 0 and infinity).
    static IsometrySample dilation_group(int max_word_length = 3);
};

struct BoundaryQuadruple {
    BoundaryPoint q0, q1, q2, q3;
};

/// The boundary cocycle c_omega for omega = f dA: the signed integral of f
/// over the ideal triangle of the triple, exactly 0 when two entries
/// coincide. Alternation is exact because the integral is always evaluated
/// on the sorted positively oriented representative.
double cocycle_value(const FunctionSpec& f, const BoundaryPoint& x0, const BoundaryPoint& x1,
                     const BoundaryPoint& x2, const QuadratureConfig& cfg);

/// |c(q1,q2,q3) - c(q0,q2,q3) + c(q0,q1,q3) - c(q0,q1,q2)|; bounded by the
/// quadrature tolerances of the four faces.
double coboundary_defect(const FunctionSpec& f, const BoundaryQuadruple& q,
                         const QuadratureConfig& cfg);

/// The straight-triangle cocycle: signed integral of f over the geodesic
/// triangle, zero for degenerate triangles.
double straight_cocycle_value(const FunctionSpec& f, const GeodesicTriangle& t,
                              const QuadratureConfig& cfg);

/// max over gamma in the sample of |c(gamma t) - c(t)|. Throws NotInvariant
/// when the probe-grid check of f(gamma z) = f(z) fails beyond 1e-9.
double invariance_defect(const FunctionSpec& f, const IsometrySample& sample,
                         const std::array<BoundaryPoint, 3>& t, const QuadratureConfig& cfg);

}  // namespace hyptrig
