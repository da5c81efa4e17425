#include "hyptrig/cocycle.hpp"

#include <algorithm>
#include <cmath>

namespace hyptrig {

namespace {

// Bounded f: |f| <= sup_norm * min{y, 1/y}^0. The cap is raised until the
// truncated horoball mass is negligible against tol, so the defect contracts
// stated in tol alone hold for any caller configuration.
QuadratureConfig with_bounded_tail(const QuadratureConfig& cfg, const FunctionSpec& f) {
    QuadratureConfig c = cfg;
    c.tail_exponent = 0.0;
    c.tail_constant = f.sup_norm();
    c.y_cap = std::max(cfg.y_cap, 40.0 * std::max(f.sup_norm(), 1e-12) / cfg.tol);
    return c;
}

}  // namespace

IsometrySample IsometrySample::dilation_group(int max_word_length) {
    IsometrySample sample;
    double lambda = 1.0;
    for (int k = 1; k <= max_word_length; ++k) {
        lambda *= 2.0;
        sample.elements.push_back(MobiusTransform::dilation(lambda));
        sample.elements.push_back(MobiusTransform::dilation(1.0 / lambda));
    }
    return sample;
}

double cocycle_value(const FunctionSpec& f, const BoundaryPoint& x0, const BoundaryPoint& x1,
                     const BoundaryPoint& x2, const QuadratureConfig& cfg) {
    if (x0 == x1 || x1 == x2 || x0 == x2) return 0.0;

    // Canonical representative: vertices sorted ascending (infinity last) is
    // positively oriented, so every permutation of the same triple hits the
    // same quadrature run and alternation holds bit-for-bit.
    std::array<BoundaryPoint, 3> sorted{x0, x1, x2};
    int sign = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2 - i; ++j)
            if (sorted[static_cast<size_t>(j + 1)] < sorted[static_cast<size_t>(j)]) {
                std::swap(sorted[static_cast<size_t>(j)], sorted[static_cast<size_t>(j + 1)]);
                sign = -sign;
            }

    const IdealTriple canonical(sorted[0], sorted[1], sorted[2]);
    const auto result = integrate_ideal_triangle(
        [&f](const Point& z) { return std::complex<double>(f(z), 0.0); }, canonical,
        with_bounded_tail(cfg, f));
    return sign * result.value.real();
}

double coboundary_defect(const FunctionSpec& f, const BoundaryQuadruple& q,
                         const QuadratureConfig& cfg) {
    const double d = cocycle_value(f, q.q1, q.q2, q.q3, cfg) -
                     cocycle_value(f, q.q0, q.q2, q.q3, cfg) +
                     cocycle_value(f, q.q0, q.q1, q.q3, cfg) -
                     cocycle_value(f, q.q0, q.q1, q.q2, cfg);
    return std::abs(d);
}

double straight_cocycle_value(const FunctionSpec& f, const GeodesicTriangle& t,
                              const QuadratureConfig& cfg) {
    const auto result = integrate_geodesic_triangle(
        [&f](const Point& z) { return std::complex<double>(f(z), 0.0); }, t, cfg);
    return result.value.real();
}

double invariance_defect(const FunctionSpec& f, const IsometrySample& sample,
                         const std::array<BoundaryPoint, 3>& t, const QuadratureConfig& cfg) {
    // Probe grid for the declared invariance f(gamma z) = f(z).
    constexpr int kN = 24;
    for (const MobiusTransform& g : sample.elements) {
        for (int i = 0; i < kN; ++i) {
            const double x = -3.0 + 6.0 * i / (kN - 1);
            for (int j = 0; j < kN; ++j) {
                const Point z(x, std::exp(-2.0 + 4.0 * j / (kN - 1)));
                if (std::abs(f(mobius_apply(g, z)) - f(z)) > 1e-9)
                    throw NotInvariant("invariance_defect: FunctionSpec '" + f.name() +
                                       "' is not invariant under the sample");
            }
        }
    }

    const double base = cocycle_value(f, t[0], t[1], t[2], cfg);
    double defect = 0.0;
    for (const MobiusTransform& g : sample.elements) {
        const double moved = cocycle_value(f, mobius_apply_boundary(g, t[0]),
                                           mobius_apply_boundary(g, t[1]),
                                           mobius_apply_boundary(g, t[2]), cfg);
        defect = std::max(defect, std::abs(moved - base));
    }
    return defect;
}

}  // namespace hyptrig
