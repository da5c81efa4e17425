#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "hyptrig/catalog.hpp"
#include "hyptrig/geometry.hpp"
#include "hyptrig/quadrature.hpp"
#include "hyptrig/special_functions.hpp"

namespace hyptrig {

/// A frequency lambda confined to the strip |Im(lambda)| <= 1 + strip_margin.
class Frequency {
  public:
    explicit Frequency(std::complex<double> lambda, double strip_margin = 0.0)
        : lambda_(lambda), strip_margin_(strip_margin) {
        if (strip_margin < 0.0) throw OutsideStrip("Frequency: strip margin must be >= 0");
        if (std::abs(lambda.imag()) > 1.0 + strip_margin)
            throw OutsideStrip("Frequency: |Im(lambda)| exceeds 1 + strip margin");
    }

    std::complex<double> lambda() const { return lambda_; }
    double strip_margin() const { return strip_margin_; }

    /// The corresponding spectral parameter s = -i lambda + 1.
    SpectralParameter spectral() const {
        return SpectralParameter(std::complex<double>(0.0, -1.0) * lambda_ + 1.0);
    }

  private:
    std::complex<double> lambda_;
    double strip_margin_;
};

/// e^{(i lambda + 1) <z, b>}.
std::complex<double> plane_wave(const Frequency& lambda, const BoundaryPoint& b, const Point& z);

/// Helgason-Fourier transform of f at (lambda, b):
/// integral of f(z) e^{(-i lambda + 1) <z, b>} dA(z) over the support of f.
/// Requires a FunctionSpec supported in T_0; throws UnsupportedFunction
/// otherwise. At b = infinity with Im(lambda) >= 0 the plane wave leaves the
/// integrable class and the value returned is the y_cap truncation.
std::complex<double> helgason_transform(const FunctionSpec& f, const Frequency& lambda,
                                        const BoundaryPoint& b, const QuadratureConfig& cfg);

/// F(s, b) = integral over T_0 of (y / ((x-b)^2 + y^2))^s dA, by the polar
/// 1-D reduction when b = 0 and by 2-D quadrature otherwise. Throws
/// BadBoundaryParameter within 1e-9 of b = +-1.
std::complex<double> F_numeric(const SpectralParameter& s, double b, const QuadratureConfig& cfg);

/// Second b-derivative of F at b = 0, by the polar 1-D reduction.
std::complex<double> F_bb_numeric(const SpectralParameter& s, const QuadratureConfig& cfg);

struct ZeroScanPoint {
    double re, im, abs_F, abs_Fbb;
};

struct ZeroScanReport {
    double re_min = 0, re_max = 0, im_min = 0, im_max = 0, step = 0;
    std::vector<ZeroScanPoint> points;  // ordered by (re, im)
    double min_joint = 0;               // min over grid of max(|F|, |F_bb|); +inf if empty
    std::complex<double> argmin{0.0, 0.0};
    double joint_threshold = 1e-8;
    std::vector<std::complex<double>> joint_near_zeros;  // both moduli below threshold
    int spot_check_stride = 0;
    long long spot_checks = 0;
    double spot_check_max_rel = 0.0;
};

struct ZeroScanOptions {
    double joint_threshold = 1e-8;
    int spot_check_stride = 50;  // re-verify every k-th point with F_numeric; 0 disables
    double spot_check_tol = 1e-7;
};

/// Evaluates |F_closed| and |F_bb_closed| on the grid
/// {re_min + i*step} x {im_min + j*step} intersected with the given ranges,
/// recording the minimum of the pointwise max of the two moduli. A no-point
/// grid yields min_joint = +infinity. Every spot_check_stride-th point is
/// re-verified against F_numeric.
ZeroScanReport wiener_zero_scan(double re_min, double re_max, double im_min, double im_max,
                                double step, const ZeroScanOptions& opts = {});

}  // namespace hyptrig
