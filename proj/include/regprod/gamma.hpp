#pragma once

#include "regprod/types.hpp"

namespace regprod {

enum class GammaTildeRoute { closed_form, weierstrass_product, log_series };

/// Classical digamma psi(z), by upward recurrence to the asymptotic region
/// followed by the Bernoulli series.  Oracle-grade: relative error <= 1e-13
/// on the validated domain.  Throws std::domain_error at the poles.
Cplx classical_digamma(Cplx z);

/// log Gamma(z) on Re(z) > 0, analytic branch (Stirling after shifting).
Cplx classical_log_gamma(Cplx z);

/// Modified digamma psi~(z) = -psi(z) + psi(z/2) + log 2.
Cplx psi_tilde(Cplx z);

/// n-th derivative psi~^(n)(z) = (-1)^(n+1) n! zeta_E(n+1, z), n <= 12.
Cplx psi_tilde_n(int n, Cplx z, const EvalConfig& cfg);

/// Modified gamma function, normalized so Gamma~(1) = pi/2.
///   closed_form:         2^(z-2) Gamma(z/2)^2 / Gamma(z), in log space.
///   weierstrass_product: truncated alternating-exponent product, factors
///                        paired before logging, tail removed by order-3
///                        Richardson extrapolation over dyadic truncations.
///   log_series:          exp of the log-series with the alternating tail
///                        summed by alt_sum.
SeriesResult gamma_tilde(Cplx z, GammaTildeRoute route, const EvalConfig& cfg);

inline SeriesResult gamma_tilde(Cplx z, const EvalConfig& cfg) {
  return gamma_tilde(z, GammaTildeRoute::closed_form, cfg);
}

/// log of the closed-form route, (z-2) log 2 + 2 log Gamma(z/2) - log Gamma(z).
Cplx log_gamma_tilde(Cplx z);

/// Modified Euler constant gamma~_0 = 1/2 + 1/2 sum (-1)^(j+1) / (j(j+1)),
/// which equals log 2.
SeriesResult mod_euler_const(const EvalConfig& cfg);

struct ModStieltjesResult {
  int k = 0;
  Cplx z{0.0, 0.0};
  Cplx value{0.0, 0.0};
  double error_estimate = 0.0;
};

/// Modified Stieltjes constant gamma~_k(z): Taylor coefficients of
/// zeta_E(s, z) about s=1, gamma~_k = (-1)^k k! a_k, extracted on a contour.
/// k <= 8, Re(z) > 0.
ModStieltjesResult mod_stieltjes(int k, Cplx z, const EvalConfig& cfg);

}  // namespace regprod
