#pragma once

#include <array>
#include <complex>
#include <optional>

#include "hyptrig/errors.hpp"

namespace hyptrig {

/// A point x + iy of the upper half-plane model, y > 0.
struct Point {
    double x;
    double y;

    Point(double x_, double y_) : x(x_), y(y_) {
        if (!(y > 0.0)) throw Error("Point: y must be positive");
    }

    std::complex<double> as_complex() const { return {x, y}; }
};

/// A point of the ideal boundary R u {infinity}.
class BoundaryPoint {
  public:
    static BoundaryPoint finite(double v) { return BoundaryPoint(v, false); }
    static BoundaryPoint infinity() { return BoundaryPoint(0.0, true); }

    bool is_infinity() const { return infinite_; }
    double value() const {
        if (infinite_) throw Error("BoundaryPoint: infinity has no finite value");
        return value_;
    }

    friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const BoundaryPoint& a, const BoundaryPoint& b) { return !(a == b); }

    /// Total order: finite values ascending, infinity greatest.
    friend bool operator<(const BoundaryPoint& a, const BoundaryPoint& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

  private:
    BoundaryPoint(double v, bool inf) : value_(v), infinite_(inf) {}
    double value_;
    bool infinite_;
};

/// Orientation-preserving isometry z -> (az + b)/(cz + d), normalized to ad - bc = 1.
class MobiusTransform {
  public:
    MobiusTransform(double a, double b, double c, double d);

    static MobiusTransform identity() { return MobiusTransform(1.0, 0.0, 0.0, 1.0); }
    /// z -> z + t
    static MobiusTransform translation(double t) { return MobiusTransform(1.0, t, 0.0, 1.0); }
    /// z -> lambda * z, lambda > 0
    static MobiusTransform dilation(double lambda);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    MobiusTransform inverse() const { return MobiusTransform(d_, -b_, -c_, a_); }

  private:
    double a_, b_, c_, d_;
};

/// m1 after m2: (compose(m1, m2))(z) = m1(m2(z)).
MobiusTransform compose(const MobiusTransform& m1, const MobiusTransform& m2);

Point mobius_apply(const MobiusTransform& m, const Point& z);
BoundaryPoint mobius_apply_boundary(const MobiusTransform& m, const BoundaryPoint& b);

/// Hyperbolic distance in the upper half-plane.
double hyperbolic_distance(const Point& z, const Point& w);

/// Busemann function <z, b> based at i = (0, 1).
double busemann(const Point& z, const BoundaryPoint& b);

/// +1 / -1 cyclic-order sign of a triple of pairwise distinct boundary points.
/// Finite (u, v, w) is positive iff (v-u)(w-v)(u-w) < 0; (u, v, inf) is positive iff u < v.
int orientation_sign(const BoundaryPoint& v0, const BoundaryPoint& v1, const BoundaryPoint& v2);

/// Ordered triple of pairwise distinct ideal points together with its orientation.
class IdealTriple {
  public:
    IdealTriple(BoundaryPoint v0, BoundaryPoint v1, BoundaryPoint v2)
        : v_{v0, v1, v2}, orientation_(0) {
        if (v0 == v1 || v1 == v2 || v0 == v2)
            throw DegenerateTriple("IdealTriple: vertices must be pairwise distinct");
        orientation_ = orientation_sign(v0, v1, v2);
    }

    const BoundaryPoint& v0() const { return v_[0]; }
    const BoundaryPoint& v1() const { return v_[1]; }
    const BoundaryPoint& v2() const { return v_[2]; }
    const BoundaryPoint& vertex(int i) const { return v_[static_cast<size_t>(i)]; }
    int orientation() const { return orientation_; }

  private:
    std::array<BoundaryPoint, 3> v_;
    int orientation_;
};

/// The unique isometry sending (v0, v1, v2) to (-1, +1, inf) in order.
/// Throws NegativelyOriented when the triple has orientation -1.
MobiusTransform mobius_to_standard_triple(const IdealTriple& t);

/// Triangle spanned by three interior points (possibly degenerate).
struct GeodesicTriangle {
    Point p0, p1, p2;
    GeodesicTriangle(Point a, Point b, Point c) : p0(a), p1(b), p2(c) {}
};

/// Interior angles at p0, p1, p2 computed from geodesic tangent directions.
/// Throws DegenerateTriangle when two vertices coincide or all three lie on
/// one geodesic within tolerance.
std::array<double, 3> triangle_angles(const GeodesicTriangle& t);

/// Orientation of the geodesic triangle: +1 when the boundary is traversed
/// counterclockwise, -1 clockwise, 0 when the vertices share a geodesic.
int triangle_orientation(const GeodesicTriangle& t);

// ---------------------------------------------------------------------------
// Hyperboloid model helpers. Points map to the upper sheet of <X,X> = -1 in
// Minkowski space R^{2,1}; geodesics become linear combinations, which gives
// closed-form parametrizations and tangents for the coning chart.
// ---------------------------------------------------------------------------

struct HVec {
    double t, x, y;
};

inline HVec operator+(const HVec& a, const HVec& b) { return {a.t + b.t, a.x + b.x, a.y + b.y}; }
inline HVec operator-(const HVec& a, const HVec& b) { return {a.t - b.t, a.x - b.x, a.y - b.y}; }
inline HVec operator*(double s, const HVec& a) { return {s * a.t, s * a.x, s * a.y}; }

/// Minkowski inner product -t1*t2 + x1*x2 + y1*y2.
inline double mdot(const HVec& a, const HVec& b) { return -a.t * b.t + a.x * b.x + a.y * b.y; }

HVec to_hyperboloid(const Point& z);
Point from_hyperboloid(const HVec& v);

/// cosh of the distance between two hyperboloid points.
inline double cosh_distance(const HVec& a, const HVec& b) { return -mdot(a, b); }

/// Point at arc-length fraction sigma in [0,1] along the geodesic from a to b.
HVec geodesic_point(const HVec& a, const HVec& b, double sigma);

/// Unit tangent at a pointing toward b (requires a != b).
HVec tangent_toward(const HVec& a, const HVec& b);

}  // namespace hyptrig
