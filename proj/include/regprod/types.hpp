#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace regprod {

using Cplx = std::complex<double>;

enum class Method {
  direct,
  paired,
  richardson,
  eta_expansion,
  euler_maclaurin,
  contour,
};

const char* method_name(Method m);

/// A computed value bundled with convergence diagnostics.
/// error_estimate is an absolute bound on the numerical error.
struct SeriesResult {
  Cplx value{0.0, 0.0};
  double error_estimate = 0.0;
  std::size_t terms_used = 0;
  Method method = Method::direct;
  bool converged = false;
  // Set when a principal-branch logarithm was taken outside the
  // validated right-half-plane domain; the result is best-effort.
  bool branch_warning = false;
};

/// All numerical policy knobs in one place.
struct EvalConfig {
  double target_rel_error = 1e-12;
  std::size_t max_terms = 1000000;
  int em_bernoulli_terms = 12;
  double shift_threshold = 12.0;
  double contour_radius = 0.5;
  int contour_nodes = 64;

  // Throws std::invalid_argument on non-positive fields or
  // contour_radius >= 1.
  void validate() const;
};

}  // namespace regprod
