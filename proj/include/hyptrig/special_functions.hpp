#pragma once

#include <complex>

#include "hyptrig/errors.hpp"

namespace hyptrig {

/// A spectral parameter s confined to the half-plane P = {Re(s) > -1}.
class SpectralParameter {
  public:
    explicit SpectralParameter(std::complex<double> s) : s_(s) {
        if (!(s.real() > -1.0))
            throw OutsideP("SpectralParameter: Re(s) must exceed -1");
    }
    SpectralParameter(double re, double im = 0.0) : SpectralParameter(std::complex<double>(re, im)) {}

    std::complex<double> value() const { return s_; }

  private:
    std::complex<double> s_;
};

/// Complex Gamma function (Lanczos approximation, reflection for Re(z) < 1/2).
/// Throws PoleAtNonpositiveInteger within 1e-12 of a pole.
std::complex<double> gamma_complex(std::complex<double> z);

/// Entire reciprocal 1/Gamma(z); zero at the nonpositive integers.
std::complex<double> reciprocal_gamma(std::complex<double> z);

/// exp(w) - 1 without cancellation for small w.
std::complex<double> expm1c(std::complex<double> w);

/// (1 - 2^{1-s}) / (s - 1), extended by log 2 at s = 1.
std::complex<double> phi_factor(std::complex<double> s);

/// (1 - (s+1) 2^{-s}) / (s - 1), extended by log 2 - 1/2 at s = 1.
std::complex<double> psi_factor(std::complex<double> s);

/// Closed form of the triangle integral F(s, 0), evaluated through the
/// pole-free rewriting phi(s) * sqrt(pi) * Gamma((s+1)/2) / Gamma(s/2 + 1),
/// analytic on all of P including s = 1.
std::complex<double> F_closed(const SpectralParameter& s);

/// Closed form of the second b-derivative of F at b = 0:
/// 4 sqrt(pi) * psi(s) * Gamma((s+1)/2) / Gamma(s/2), analytic on P (the
/// Gamma pole at s = 0 appears as a zero of the reciprocal).
std::complex<double> F_bb_closed(const SpectralParameter& s);

/// Gamma-ratio side of the half-angle moment identity:
/// Gamma((s1+1)/2) Gamma((s2+1)/2) / (2 Gamma((s1+s2)/2 + 1)).
std::complex<double> beta_gamma_ratio(std::complex<double> s1, std::complex<double> s2);

}  // namespace hyptrig
