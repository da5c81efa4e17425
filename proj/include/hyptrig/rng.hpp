#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "hyptrig/geometry.hpp"

namespace hyptrig {

/// Seeded generator with hand-rolled distributions so that identical seeds
/// give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double normal() {
        // Box-Muller, one value per call for a reproducible stream
        const double u = std::max(uniform01(), 0x1.0p-53);
        const double v = uniform01();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    /// Standard Cauchy: the visual measure on the boundary seen from (0, 1).
    double cauchy() { return std::tan(std::numbers::pi * (uniform01() - 0.5)); }

  private:
    std::mt19937_64 eng_;
};

/// Random normalized orientation-preserving isometry with well-conditioned
/// coefficients.
inline MobiusTransform random_isometry(Rng& rng) {
    for (;;) {
        double a = rng.normal(), b = rng.normal(), c = rng.normal(), d = rng.normal();
        double det = a * d - b * c;
        if (std::abs(det) < 0.3) continue;
        if (det < 0.0) {
            std::swap(a, c);
            std::swap(b, d);
        }
        return MobiusTransform(a, b, c, d);
    }
}

/// Random point with x uniform in [-bound, bound] and log y uniform in
/// [-log_height, log_height].
inline Point random_point(Rng& rng, double bound = 2.0, double log_height = 1.5) {
    return Point(rng.uniform(-bound, bound), std::exp(rng.uniform(-log_height, log_height)));
}

}  // namespace hyptrig
