#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regprod/types.hpp"

namespace regprod {

/// The shift list z_1..z_n of the regularized alternating product, plus an
/// optional explicit cutoff for the finite/tail decomposition.
struct ProductSpec {
  std::vector<Cplx> shifts;
  long long cutoff_c = -1;  // -1: auto, max(10, ceil(2 max|z_j|))

  std::size_t n() const { return shifts.size(); }
  // Throws std::invalid_argument on empty shifts, shifts at or within
  // 1e-12 of {0,-1,-2,...}, or an explicit cutoff with |z_j|/(c+1) >= 1.
  void validate() const;
  long long resolved_cutoff() const;
};

enum class Identity {
  mizuno,
  lerch,
  lerch_qi,
  kurokawa_wakayama,
  wallis,
  classical_lerch,
};

const char* identity_name(Identity id);

struct VerificationReport {
  Identity identity = Identity::mizuno;
  Cplx lhs{0.0, 0.0};
  Cplx rhs{0.0, 0.0};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::map<std::string, std::string> metadata;
};

enum class TailMethod { eta_expansion, paired_direct };

/// Lambda*(s) = sum_{m>=0} (-1)^(m+1) prod_j (m+z_j)^(-s), Re(s) > 0,
/// by accelerated alternating summation.
SeriesResult lambda_star(Cplx s, const ProductSpec& spec, const EvalConfig& cfg);

/// d/ds Lambda*(s) at s=0 through the cutoff decomposition: finite head,
/// compensating log/harmonic sums up to the cutoff, the absolutely
/// convergent tail (eta-expansion by default, paired direct summation as
/// the independent check), and the eta'(0)/eta(1) boundary terms.
SeriesResult lambda_star_deriv_zero(const ProductSpec& spec,
                                    const EvalConfig& cfg,
                                    TailMethod tail = TailMethod::eta_expansion);

/// The zeta-regularized alternating product
/// prod_{m>=0} {prod_j (m+z_j)}^((-1)^m) = exp(Lambda*'(0)).
SeriesResult reg_alt_product(const ProductSpec& spec, const EvalConfig& cfg,
                             TailMethod tail = TailMethod::eta_expansion);

/// Closed-form right-hand side (pi/2)^(n/2) / prod_j Gamma~(z_j),
/// accumulated in log space.
SeriesResult mizuno_rhs(const ProductSpec& spec, const EvalConfig& cfg);

VerificationReport verify_mizuno(const ProductSpec& spec, double tol,
                                 const EvalConfig& cfg);

/// Kurokawa-Wakayama type identity: shifts x - zeta^j y over the n-th roots
/// of unity, verified against the closed form, plus the exact polynomial
/// sanity check prod_j (m + x - zeta^j y) = (m+x)^n - y^n for m = 0..5.
VerificationReport kurokawa_wakayama(int n, Cplx x, Cplx y, double tol,
                                     const EvalConfig& cfg);

/// Partial Wallis product through k = 2*pairs of prod (k/(k+1))^((-1)^k).
SeriesResult wallis_partial(long long pairs);

/// Partial products at the dyadic truncations max_pairs/2^(levels-1), ...,
/// max_pairs, oldest first; Richardson-ready sample set.
std::vector<Cplx> wallis_dyadic_partials(long long max_pairs, int levels);

/// Richardson-extrapolated Wallis value from the dyadic sample set.
SeriesResult wallis_extrapolated(long long max_pairs);

VerificationReport verify_wallis(long long pairs, double tol);

/// Empirical regularization oracle: geometric mean of consecutive partial
/// products sqrt(P_{2M} P_{2M+1}), Richardson-extrapolated over dyadic M,
/// in log space throughout.
SeriesResult geometric_mean_oracle(const ProductSpec& spec, long long M);

/// Classical Lerch formula prod (m+z) = sqrt(2 pi) / Gamma(z), realized as
/// exp(-zeta'(0, z)) against the classical-gamma oracle.
VerificationReport classical_lerch_check(Cplx z, double tol,
                                         const EvalConfig& cfg);

/// exp(2 pi i j / n) for j = 0..n-1.
std::vector<Cplx> roots_of_unity(int n);

/// Randomized identity sweep: `cases` product specs with n in {1..4},
/// Re(z_j) in [0.2, 5], |Im(z_j)| <= 5, drawn from a fixed seed.
std::vector<VerificationReport> verify_suite(std::uint64_t seed, int cases,
                                             double tol, const EvalConfig& cfg);

}  // namespace regprod
