#include "hyptrig/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hyptrig {

MobiusTransform::MobiusTransform(double a, double b, double c, double d) {
    const double det = a * d - b * c;
    if (!(det > 0.0))
        throw SingularTransform("MobiusTransform: ad - bc must be positive");
    if (det < 1e-14)
        throw SingularTransform("MobiusTransform: ad - bc below singularity tolerance");
    const double r = std::sqrt(det);
    a_ = a / r;
    b_ = b / r;
    c_ = c / r;
    d_ = d / r;
}

MobiusTransform MobiusTransform::dilation(double lambda) {
    if (!(lambda > 0.0)) throw SingularTransform("dilation: factor must be positive");
    const double r = std::sqrt(lambda);
    return MobiusTransform(r, 0.0, 0.0, 1.0 / r);
}

MobiusTransform compose(const MobiusTransform& m1, const MobiusTransform& m2) {
    return MobiusTransform(m1.a() * m2.a() + m1.b() * m2.c(),
                           m1.a() * m2.b() + m1.b() * m2.d(),
                           m1.c() * m2.a() + m1.d() * m2.c(),
                           m1.c() * m2.b() + m1.d() * m2.d());
}

Point mobius_apply(const MobiusTransform& m, const Point& z) {
    const double p = m.c() * z.x + m.d();
    const double q = p * p + m.c() * m.c() * z.y * z.y;
    const double xr = ((m.a() * z.x + m.b()) * p + m.a() * m.c() * z.y * z.y) / q;
    // Im((az+b)/(cz+d)) = y (ad - bc) / |cz+d|^2 = y / q for normalized coefficients.
    return Point(xr, z.y / q);
}

BoundaryPoint mobius_apply_boundary(const MobiusTransform& m, const BoundaryPoint& b) {
    if (b.is_infinity()) {
        if (m.c() == 0.0) return BoundaryPoint::infinity();
        return BoundaryPoint::finite(m.a() / m.c());
    }
    const double v = b.value();
    const double denom = m.c() * v + m.d();
    // cv + d = 0 detected relative to the summand scale, so that poles
    // survive the rounding introduced by coefficient normalization
    if (std::abs(denom) <= 1e-14 * (std::abs(m.c() * v) + std::abs(m.d())))
        return BoundaryPoint::infinity();
    return BoundaryPoint::finite((m.a() * v + m.b()) / denom);
}

double hyperbolic_distance(const Point& z, const Point& w) {
    const double dx = z.x - w.x;
    const double dy = z.y - w.y;
    const double t = (dx * dx + dy * dy) / (2.0 * z.y * w.y);
    // arccosh(1 + t), written to stay accurate as t -> 0.
    return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double busemann(const Point& z, const BoundaryPoint& b) {
    if (b.is_infinity()) return std::log(z.y);
    const double bv = b.value();
    const double dx = z.x - bv;
    return std::log(((bv * bv + 1.0) * z.y) / (dx * dx + z.y * z.y));
}

int orientation_sign(const BoundaryPoint& v0, const BoundaryPoint& v1, const BoundaryPoint& v2) {
    if (v0 == v1 || v1 == v2 || v0 == v2)
        throw DegenerateTriple("orientation_sign: vertices must be pairwise distinct");
    if (v0.is_infinity()) return v1.value() < v2.value() ? +1 : -1;
    if (v1.is_infinity()) return v2.value() < v0.value() ? +1 : -1;
    if (v2.is_infinity()) return v0.value() < v1.value() ? +1 : -1;
    const double u = v0.value(), v = v1.value(), w = v2.value();
    return (v - u) * (w - v) * (u - w) < 0.0 ? +1 : -1;
}

MobiusTransform mobius_to_standard_triple(const IdealTriple& t) {
    if (t.orientation() != +1)
        throw NegativelyOriented("mobius_to_standard_triple: triple must be positively oriented");

    // First the cross-ratio map sending (v0, v1, v2) to (0, 1, inf),
    // with separate branches when a vertex is the point at infinity.
    double a, b, c, d;
    if (t.v0().is_infinity()) {
        const double x1 = t.v1().value(), x2 = t.v2().value();
        a = 0.0;
        b = x1 - x2;
        c = 1.0;
        d = -x2;
    } else if (t.v1().is_infinity()) {
        const double x0 = t.v0().value(), x2 = t.v2().value();
        a = 1.0;
        b = -x0;
        c = 1.0;
        d = -x2;
    } else if (t.v2().is_infinity()) {
        const double x0 = t.v0().value(), x1 = t.v1().value();
        a = 1.0;
        b = -x0;
        c = 0.0;
        d = x1 - x0;
    } else {
        const double x0 = t.v0().value(), x1 = t.v1().value(), x2 = t.v2().value();
        a = x1 - x2;
        b = -x0 * (x1 - x2);
        c = x1 - x0;
        d = -x2 * (x1 - x0);
    }
    // Then v -> 2v - 1 moves (0, 1, inf) onto (-1, +1, inf).
    return MobiusTransform(2.0 * a - c, 2.0 * b - d, c, d);
}

HVec to_hyperboloid(const Point& z) {
    const double r2 = z.x * z.x + z.y * z.y;
    return {(r2 + 1.0) / (2.0 * z.y), (r2 - 1.0) / (2.0 * z.y), z.x / z.y};
}

Point from_hyperboloid(const HVec& v) {
    const double y = 1.0 / (v.t - v.x);
    return Point(v.y * y, y);
}

HVec geodesic_point(const HVec& a, const HVec& b, double sigma) {
    const double ch = std::max(1.0, cosh_distance(a, b));
    const double d = std::acosh(ch);
    HVec g{0, 0, 0};
    if (d < 1e-12) {
        g = (1.0 - sigma) * a + sigma * b;
    } else {
        const double sh = std::sinh(d);
        g = (1.0 / sh) * (std::sinh((1.0 - sigma) * d) * a + std::sinh(sigma * d) * b);
    }
    // Project back onto <g,g> = -1 to absorb roundoff drift.
    const double n = std::sqrt(-mdot(g, g));
    return (1.0 / n) * g;
}

HVec tangent_toward(const HVec& a, const HVec& b) {
    const double ch = std::max(1.0, cosh_distance(a, b));
    const double sh = std::sqrt((ch - 1.0) * (ch + 1.0));
    if (sh < 1e-150) throw DegenerateTriangle("tangent_toward: points coincide");
    return (1.0 / sh) * (b - ch * a);
}

std::array<double, 3> triangle_angles(const GeodesicTriangle& t) {
    const HVec A = to_hyperboloid(t.p0);
    const HVec B = to_hyperboloid(t.p1);
    const HVec C = to_hyperboloid(t.p2);

    if (hyperbolic_distance(t.p0, t.p1) < 1e-12 || hyperbolic_distance(t.p1, t.p2) < 1e-12 ||
        hyperbolic_distance(t.p0, t.p2) < 1e-12)
        throw DegenerateTriangle("triangle_angles: two vertices coincide");

    // The triple product vanishes exactly when the three points lie on a
    // common plane through the origin, i.e. on a common geodesic.
    const double det = A.t * (B.x * C.y - B.y * C.x) - A.x * (B.t * C.y - B.y * C.t) +
                       A.y * (B.t * C.x - B.x * C.t);
    const double scale = std::sqrt((A.t * A.t + A.x * A.x + A.y * A.y) *
                                   (B.t * B.t + B.x * B.x + B.y * B.y) *
                                   (C.t * C.t + C.x * C.x + C.y * C.y));
    if (std::abs(det) < 1e-10 * scale)
        throw DegenerateTriangle("triangle_angles: vertices lie on a common geodesic");

    auto angle_at = [](const HVec& p, const HVec& q, const HVec& r) {
        const HVec u = tangent_toward(p, q);
        const HVec v = tangent_toward(p, r);
        return std::acos(std::clamp(mdot(u, v), -1.0, 1.0));
    };
    return {angle_at(A, B, C), angle_at(B, C, A), angle_at(C, A, B)};
}

int triangle_orientation(const GeodesicTriangle& t) {
    // Sign of the Minkowski triple product: Lorentz-invariant, so isometries
    // preserve it; it vanishes exactly when the vertices share a geodesic.
    // (The Euclidean chord cross product is not a Mobius invariant.)
    const HVec a = to_hyperboloid(t.p0);
    const HVec b = to_hyperboloid(t.p1);
    const HVec c = to_hyperboloid(t.p2);
    const double det = a.t * (b.x * c.y - b.y * c.x) - a.x * (b.t * c.y - b.y * c.t) +
                       a.y * (b.t * c.x - b.x * c.t);
    return (det < 0.0) - (det > 0.0);  // counterclockwise triples have det < 0
}

}  // namespace hyptrig
