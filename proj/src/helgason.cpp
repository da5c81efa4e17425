#include "hyptrig/helgason.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hyptrig/parallel.hpp"

namespace hyptrig {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// (1 - e^w) * e^E without overflowing intermediate factors. The E-overflow
// branch is only reachable when w is tiny (deep endpoint cells), where the
// cubic correction keeps full double precision.
cplx one_minus_exp_times_exp(cplx w, cplx E) {
    if (w == 0.0) return 0.0;
    if (w.real() > 690.0) return -std::exp(w + E);
    if (E.real() > 690.0)
        return -std::exp(E + std::log(w)) * (1.0 + 0.5 * w + w * w / 6.0);
    const cplx a = -expm1c(w);
    if (a == 0.0) return 0.0;
    return a * std::exp(E);
}

// log(cos x) for x in (0, pi/4], accurate as x -> 0.
double log_cos(double x) {
    const double s = std::sin(0.5 * x);
    return std::log1p(-2.0 * s * s);
}

cplx F_polar_b0(cplx s, const QuadratureConfig& cfg) {
    if (s == 0.0) return kPi;  // F(0, 0) is the area of the ideal triangle
    // F(s,0) = (2/s) * int_0^{pi/2} (1 - cos^s t) sin^{s-2} t dt, split at
    // pi/4 and folded so each half sees its singular endpoint at 0.
    const double half_tol = std::max(0.25 * cfg.tol * std::abs(s), 1e-3 * cfg.tol);
    auto left = [s](double th) -> cplx {
        return one_minus_exp_times_exp(s * log_cos(th), (s - 2.0) * std::log(std::sin(th)));
    };
    auto right = [s](double t) -> cplx {
        return one_minus_exp_times_exp(s * std::log(std::sin(t)), (s - 2.0) * log_cos(t));
    };
    const cplx total = integrate_interval(left, 0.0, kPi / 4.0, half_tol).value +
                       integrate_interval(right, 0.0, kPi / 4.0, half_tol).value;
    return (2.0 / s) * total;
}

}  // namespace

cplx plane_wave(const Frequency& lambda, const BoundaryPoint& b, const Point& z) {
    return std::exp((kI * lambda.lambda() + 1.0) * busemann(z, b));
}

cplx F_numeric(const SpectralParameter& sp, double b, const QuadratureConfig& cfg) {
    const cplx s = sp.value();
    if (std::abs(b - 1.0) < 1e-9 || std::abs(b + 1.0) < 1e-9)
        throw BadBoundaryParameter("F_numeric: F(s, b) diverges at b = +-1");
    if (b == 0.0) return F_polar_b0(s, cfg);

    const double sigma = s.real();
    auto f = [s, b](const Point& z) -> cplx {
        const double dx = z.x - b;
        return std::exp(s * std::log(z.y / (dx * dx + z.y * z.y)));
    };
    // |(y/((x-b)^2+y^2))^s| <= C * min{y, 1/y}^sigma on T_0, with the
    // endpoint constants from the elementary distance bounds.
    const double kb = (1.0 + std::abs(b)) * (1.0 + std::abs(b)) + 1.0;
    const double cb = std::min((1.0 - b) * (1.0 - b), (1.0 + b) * (1.0 + b));
    const double ctb = std::min(1.0, cb);
    QuadratureConfig c2 = cfg;
    c2.tail_exponent = sigma;
    c2.tail_constant = std::max(std::pow(kb, -sigma), std::pow(ctb, -sigma));
    return integrate_T0(f, c2).value;
}

cplx F_bb_numeric(const SpectralParameter& sp, const QuadratureConfig& cfg) {
    const cplx s = sp.value();
    if (s == 0.0) return 0.0;  // second derivative of the constant area

    const cplx c1 = 2.0 * s * s + s;
    const cplx c2 = 2.0 * s * s + 2.0 * s;
    const double half_tol = cfg.tol * std::abs(s + 2.0) / 8.0;
    auto left = [&](double th) -> cplx {
        const double sn = std::sin(th);
        const cplx poly = c1 - c2 * (sn * sn);
        return one_minus_exp_times_exp((s + 2.0) * log_cos(th), (s - 2.0) * std::log(sn)) * poly;
    };
    auto right = [&](double t) -> cplx {
        const double cs = std::cos(t);
        const cplx poly = c1 - c2 * (cs * cs);
        return one_minus_exp_times_exp((s + 2.0) * std::log(std::sin(t)), (s - 2.0) * log_cos(t)) *
               poly;
    };
    const cplx total = integrate_interval(left, 0.0, kPi / 4.0, half_tol).value +
                       integrate_interval(right, 0.0, kPi / 4.0, half_tol).value;
    return (4.0 / (s + 2.0)) * total;
}

cplx helgason_transform(const FunctionSpec& f, const Frequency& lambda, const BoundaryPoint& b,
                        const QuadratureConfig& cfg) {
    if (f.support() != Support::standard_triangle)
        throw UnsupportedFunction(
            "helgason_transform: FunctionSpec '" + f.name() +
            "' lacks the T_0 support metadata needed for an integrable transform");

    const cplx s = lambda.spectral().value();
    const double sigma = s.real();
    const cplx exponent = -kI * lambda.lambda() + 1.0;
    auto g = [&](const Point& z) -> cplx {
        const double fv = f(z);
        if (fv == 0.0) return 0.0;
        return fv * std::exp(exponent * busemann(z, b));
    };

    if (b.is_infinity()) {
        if (sigma < 1.0) {
            QuadratureConfig c2 = cfg;
            c2.tail_exponent = -sigma;
            c2.tail_constant = f.sup_norm();
            return integrate_T0(g, c2).value;
        }
        // The plane wave at b = infinity grows like y^sigma, sigma >= 1: the
        // transform does not converge absolutely and the truncated value is
        // the meaningful quantity.
        return integrate_T0_truncated(g, cfg).value;
    }

    const double bv = b.value();
    const double cb = std::min((1.0 - bv) * (1.0 - bv), (1.0 + bv) * (1.0 + bv));
    if (cb < 1e-18)
        throw BadBoundaryParameter("helgason_transform: transform of 1_{T_0} diverges at b = +-1");
    const double kb = (1.0 + std::abs(bv)) * (1.0 + std::abs(bv)) + 1.0;
    const double ctb = std::min(1.0, cb);
    QuadratureConfig c2 = cfg;
    c2.tail_exponent = sigma;
    c2.tail_constant = f.sup_norm() * std::pow(bv * bv + 1.0, sigma) *
                       std::max(std::pow(kb, -sigma), std::pow(ctb, -sigma));
    return integrate_T0(g, c2).value;
}

ZeroScanReport wiener_zero_scan(double re_min, double re_max, double im_min, double im_max,
                                double step, const ZeroScanOptions& opts) {
    if (!(step > 0.0)) throw Error("wiener_zero_scan: step must be positive");
    if (!(re_min > -1.0)) throw OutsideP("wiener_zero_scan: re range must lie inside P");

    ZeroScanReport rep;
    rep.re_min = re_min;
    rep.re_max = re_max;
    rep.im_min = im_min;
    rep.im_max = im_max;
    rep.step = step;
    rep.joint_threshold = opts.joint_threshold;
    rep.spot_check_stride = opts.spot_check_stride;

    const double slack = 1e-9 * step;
    const long long nre =
        re_max + slack >= re_min ? static_cast<long long>((re_max - re_min + slack) / step) + 1 : 0;
    const long long nim =
        im_max + slack >= im_min ? static_cast<long long>((im_max - im_min + slack) / step) + 1 : 0;
    const long long n = nre * nim;

    if (n == 0) {
        rep.min_joint = std::numeric_limits<double>::infinity();
        return rep;
    }

    rep.points.resize(static_cast<size_t>(n));
    parallel_for(nre, [&](long long i) {
        const double re = re_min + static_cast<double>(i) * step;
        for (long long j = 0; j < nim; ++j) {
            const double im = im_min + static_cast<double>(j) * step;
            const SpectralParameter s(re, im);
            ZeroScanPoint& p = rep.points[static_cast<size_t>(i * nim + j)];
            p.re = re;
            p.im = im;
            p.abs_F = std::abs(F_closed(s));
            p.abs_Fbb = std::abs(F_bb_closed(s));
        }
    });

    rep.min_joint = std::numeric_limits<double>::infinity();
    for (const ZeroScanPoint& p : rep.points) {
        const double joint = std::max(p.abs_F, p.abs_Fbb);
        if (joint < rep.min_joint) {
            rep.min_joint = joint;
            rep.argmin = cplx(p.re, p.im);
        }
        if (p.abs_F < opts.joint_threshold && p.abs_Fbb < opts.joint_threshold)
            rep.joint_near_zeros.emplace_back(p.re, p.im);
    }

    if (opts.spot_check_stride > 0) {
        const long long stride = opts.spot_check_stride;
        const long long checks = (n + stride - 1) / stride;
        std::vector<double> rel(static_cast<size_t>(checks), 0.0);
        QuadratureConfig cfg;
        cfg.tol = opts.spot_check_tol;
        parallel_for(checks, [&](long long k) {
            const ZeroScanPoint& p = rep.points[static_cast<size_t>(k * stride)];
            const SpectralParameter s(p.re, p.im);
            const cplx fc = F_closed(s);
            const cplx fn = F_numeric(s, 0.0, cfg);
            rel[static_cast<size_t>(k)] = std::abs(fn - fc) / (1.0 + std::abs(fc));
        });
        rep.spot_checks = checks;
        rep.spot_check_max_rel = *std::max_element(rel.begin(), rel.end());
    }
    return rep;
}

}  // namespace hyptrig
