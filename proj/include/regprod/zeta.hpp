#pragma once

#include "regprod/types.hpp"

namespace regprod {

enum class AltZetaMethod { split, direct };

/// Hurwitz zeta zeta(s, z) = sum_{m>=0} (m+z)^(-s), analytically continued
/// in s.  The shift recurrence zeta(s,z) = zeta(s,z+1) + z^(-s) is applied
/// until the argument is large enough for Euler-Maclaurin summation with
/// cfg.em_bernoulli_terms correction terms.
/// Throws std::domain_error near the pole s=1 (|s-1| < 1e-8) or at
/// z in {0,-1,-2,...}.
SeriesResult hurwitz_zeta(Cplx s, Cplx z, const EvalConfig& cfg);

/// Pole-free difference zeta(s, za) - zeta(s, zb).  The 1/(s-1) pole terms
/// of the two Euler-Maclaurin evaluations are combined analytically, so the
/// result is finite and smooth across s=1.
SeriesResult hurwitz_zeta_diff(Cplx s, Cplx za, Cplx zb, const EvalConfig& cfg);

/// d/ds zeta(s, z) at s0, via the Taylor coefficient a_1 extracted on a
/// contour of radius cfg.contour_radius about s0.  The disk must exclude
/// the pole s=1.
SeriesResult hurwitz_zeta_s_derivative(Cplx s0, Cplx z, const EvalConfig& cfg);

/// Riemann zeta(s) = hurwitz_zeta(s, 1).
SeriesResult riemann_zeta(Cplx s, const EvalConfig& cfg);

/// Dirichlet eta(s) = (1 - 2^(1-s)) zeta(s), entire in s.  Near s=1 the
/// removable singularity is evaluated by a Taylor expansion built from the
/// Stieltjes coefficients of zeta about 1.
SeriesResult dirichlet_eta(Cplx s, const EvalConfig& cfg);

/// eta'(0) = log sqrt(pi/2), by contour differentiation of dirichlet_eta.
SeriesResult eta_prime_zero(const EvalConfig& cfg);

/// Alternating Hurwitz zeta zeta_E(s, z) = sum_{m>=0} (-1)^m (m+z)^(-s),
/// entire in s.
///   split:  2^(-s) * (zeta(s, z/2) - zeta(s, (z+1)/2)) through the
///           pole-free pair evaluation; valid for all s.
///   direct: accelerated alternating sum; requires Re(s) > 0.
SeriesResult alt_hurwitz_zeta(Cplx s, Cplx z, AltZetaMethod method,
                              const EvalConfig& cfg);

inline SeriesResult alt_hurwitz_zeta(Cplx s, Cplx z, const EvalConfig& cfg) {
  return alt_hurwitz_zeta(s, z, AltZetaMethod::split, cfg);
}

}  // namespace regprod
