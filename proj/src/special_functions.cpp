#include "hyptrig/special_functions.hpp"

#include <cmath>
#include <numbers>

namespace hyptrig {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kLog2 = std::numbers::ln2;
const double kSqrtPi = std::sqrt(kPi);
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cplx lanczos_gamma(cplx z) {
    // valid for Re(z) >= 0.5
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return kSqrt2Pi * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

bool near_nonpositive_integer(cplx z) {
    if (std::abs(z.imag()) > 1e-12) return false;
    const double n = std::round(z.real());
    return n <= 0.0 && std::abs(z.real() - n) <= 1e-12;
}

}  // namespace

cplx expm1c(cplx w) {
    const double a = w.real(), b = w.imag();
    const double ea = std::exp(a);
    const double sh = std::sin(0.5 * b);
    return {std::expm1(a) * std::cos(b) - 2.0 * sh * sh, ea * std::sin(b)};
}

cplx gamma_complex(cplx z) {
    if (z.real() >= 0.5) return lanczos_gamma(z);
    if (near_nonpositive_integer(z))
        throw PoleAtNonpositiveInteger("gamma_complex: pole at nonpositive integer");
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
}

cplx reciprocal_gamma(cplx z) {
    if (z.real() >= 0.5) return 1.0 / lanczos_gamma(z);
    if (z.imag() == 0.0 && z.real() == std::round(z.real())) return 0.0;  // exact pole
    return std::sin(kPi * z) * lanczos_gamma(1.0 - z) / kPi;
}

cplx phi_factor(cplx s) {
    const cplx w = 1.0 - s;
    if (w == 0.0) return kLog2;
    return expm1c(w * kLog2) / w;
}

cplx psi_factor(cplx s) {
    const cplx w = s - 1.0;
    if (w == 0.0) return kLog2 - 0.5;
    // (1 - (s+1) 2^{-s}) / (s-1) with the difference taken inside expm1
    return -expm1c(-w * kLog2) / w - 0.5 * std::exp(-w * kLog2);
}

cplx F_closed(const SpectralParameter& sp) {
    const cplx s = sp.value();
    return phi_factor(s) * kSqrtPi * gamma_complex(0.5 * (s + 1.0)) /
           gamma_complex(0.5 * s + 1.0);
}

cplx F_bb_closed(const SpectralParameter& sp) {
    const cplx s = sp.value();
    return 4.0 * kSqrtPi * psi_factor(s) * gamma_complex(0.5 * (s + 1.0)) *
           reciprocal_gamma(0.5 * s);
}

cplx beta_gamma_ratio(cplx s1, cplx s2) {
    return gamma_complex(0.5 * (s1 + 1.0)) * gamma_complex(0.5 * (s2 + 1.0)) /
           (2.0 * gamma_complex(0.5 * (s1 + s2) + 1.0));
}

}  // namespace hyptrig
