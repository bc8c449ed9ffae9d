#pragma once

#include <functional>
#include <vector>

#include "regprod/types.hpp"

namespace regprod {

/// Bernoulli numbers B_0..B_count with the convention B_1 = -1/2.
/// Generated once in exact rational arithmetic, then cached as doubles.
/// count must lie in [0, 64].
std::vector<double> bernoulli_numbers(int count);

/// Sum of the alternating series term(start) + term(start+1) + ... where the
/// terms carry their own signs, (-1)^(m+1) times a smoothly decaying
/// magnitude.  Consecutive terms are pair-averaged recursively (the
/// Euler/van Wijngaarden transformation), which makes the tail absolutely
/// summable and accelerates convergence geometrically once the smooth part
/// dominates.  Returns converged=false with the best estimate when the
/// budget cfg.max_terms runs out.
SeriesResult alt_sum(const std::function<Cplx(long long)>& term,
                     long long start, const EvalConfig& cfg);

/// Eliminates the leading error terms of a sequence of partial results
/// sampled at dyadic truncation points M, 2M, 4M, ...  The error must be
/// expandable in integer powers of 1/M; the last order+1 entries are used.
Cplx richardson_extrapolate(const std::vector<Cplx>& partials, int order);

/// Taylor coefficients a_0..a_k_max of f about center, via trapezoidal
/// quadrature of the Cauchy integral on the circle of the given radius.
/// f must be analytic on the closed disk; nodes >= 4*(k_max+1).
std::vector<Cplx> contour_taylor_coeffs(const std::function<Cplx(Cplx)>& f,
                                        Cplx center, double radius, int k_max,
                                        int nodes);

/// Compensated (Kahan) accumulator for complex values.
class KahanSum {
 public:
  void add(Cplx x) {
    const Cplx y = x - comp_;
    const Cplx t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  Cplx value() const { return sum_; }

 private:
  Cplx sum_{0.0, 0.0};
  Cplx comp_{0.0, 0.0};
};

}  // namespace regprod
