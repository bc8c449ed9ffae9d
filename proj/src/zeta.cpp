#include "regprod/zeta.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "regprod/num_core.hpp"

namespace regprod {

namespace {

constexpr double kPoleGuard = 1e-8;
constexpr double kEtaSwitch = 1e-3;

bool near_nonpos_int(Cplx z, double tol = 1e-12) {
  if (z.real() > 0.5) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol;
}

// exp(w) - 1, stable for small |w|.
Cplx cexpm1(Cplx w) {
  if (std::abs(w) < 1e-4) {
    return w * (1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0)));
  }
  return std::exp(w) - 1.0;
}

// (exp(w) - 1) / w with the limit 1 at w = 0.
Cplx expm1_over(Cplx w) {
  if (std::abs(w) < 1e-4) {
    return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0));
  }
  return (std::exp(w) - 1.0) / w;
}

// Euler-Maclaurin evaluation of zeta(s, z) with the 1/(s-1) pole kept
// symbolic: zeta(s,z) = regular + exp((1-s) log_a) / (s-1).
struct EmEval {
  Cplx regular{0.0, 0.0};
  Cplx log_a{0.0, 0.0};
  double err = 0.0;
  std::size_t terms = 0;
  bool branch_warning = false;
};

EmEval em_eval(Cplx s, Cplx z, const EvalConfig& cfg) {
  if (near_nonpos_int(z)) {
    throw std::domain_error("hurwitz zeta: z is a non-positive integer");
  }

  EmEval out;
  // Shift until the argument is deep enough in the asymptotic region; a
  // larger |s| needs a larger argument for the correction terms to decay.
  const double a_min = std::max(cfg.shift_threshold, 0.5 * std::abs(s));
  long long shift = 0;
  if (z.real() < a_min) {
    shift = static_cast<long long>(std::ceil(a_min - z.real()));
  }

  KahanSum head;
  for (long long m = 0; m < shift; ++m) {
    const Cplx w = z + static_cast<double>(m);
    if (w.real() <= 0.0) out.branch_warning = true;
    head.add(std::exp(-s * std::log(w)));
  }
  const Cplx a = z + static_cast<double>(shift);
  const Cplx log_a = std::log(a);
  const Cplx a_pow = std::exp(-s * log_a);  // a^(-s)

  // zeta(s,a) = a^(1-s)/(s-1) + a^(-s)/2
  //           + sum_k B_2k/(2k)! (s)(s+1)..(s+2k-2) a^(-s-2k+1)
  const int K = cfg.em_bernoulli_terms;
  const auto bern = bernoulli_numbers(std::min(2 * K + 2, 64));
  KahanSum corr;
  Cplx rising = s;                               // (s)(s+1)...(s+2k-2)
  Cplx apow = a_pow / a;                         // a^(-s-1)
  const Cplx a2inv = 1.0 / (a * a);
  double fact = 2.0;                             // (2k)!
  double last_term = 0.0;
  for (int k = 1; k <= K + 1; ++k) {
    if (k > 1) {
      rising *= (s + static_cast<double>(2 * k - 3)) *
                (s + static_cast<double>(2 * k - 2));
      apow *= a2inv;
      fact *= (2.0 * k - 1.0) * (2.0 * k);
    }
    const int idx = 2 * k;
    const double b2k = idx < static_cast<int>(bern.size())
                           ? bern[idx]
                           : 0.0;  // beyond the table: treated as converged
    const Cplx term = (b2k / fact) * rising * apow;
    last_term = std::abs(term);
    if (k <= K) corr.add(term);
  }

  out.regular = head.value() + 0.5 * a_pow + corr.value();
  out.log_a = log_a;
  out.err = last_term +
            std::numeric_limits<double>::epsilon() * std::abs(out.regular);
  out.terms = static_cast<std::size_t>(shift) + static_cast<std::size_t>(K);
  return out;
}

SeriesResult finish(Cplx value, double err, std::size_t terms, Method method,
                    bool branch, const EvalConfig& cfg) {
  SeriesResult out;
  out.value = value;
  out.error_estimate = err;
  out.terms_used = terms;
  out.method = method;
  out.branch_warning = branch;
  out.converged = err <= cfg.target_rel_error * std::max(1.0, std::abs(value));
  return out;
}

// Stieltjes-type coefficients c_k of zeta(s) - 1/(s-1) about s=1, so that
// zeta(1+u) = 1/u + sum_k c_k u^k.  Cached after first use.
const std::vector<Cplx>& zeta_stieltjes_coeffs() {
  static const std::vector<Cplx> coeffs = [] {
    EvalConfig cfg;
    return contour_taylor_coeffs(
        [&cfg](Cplx s) {
          return hurwitz_zeta(s, 1.0, cfg).value - 1.0 / (s - 1.0);
        },
        Cplx(1.0, 0.0), 0.5, 8, 64);
  }();
  return coeffs;
}

// Taylor evaluation of eta(1+u) = A(u) (1/u + sum_k c_k u^k) where
// A(u) = 1 - 2^(-u) = sum_{j>=1} (-1)^(j+1) log(2)^j u^j / j!.
Cplx eta_near_one(Cplx u) {
  constexpr int kOrder = 6;
  const auto& c = zeta_stieltjes_coeffs();
  double lp = 1.0;  // log(2)^j / j!
  Cplx acc{0.0, 0.0};
  Cplx upow_j{1.0, 0.0};  // u^(j-1)
  for (int j = 1; j <= kOrder + 1; ++j) {
    lp *= std::numbers::ln2 / j;
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    const double aj = sign * lp;
    acc += aj * upow_j;  // a_j u^(j-1), the pole cross-term
    Cplx upow_jk = upow_j * u;  // u^(j+k), starting at k=0
    for (int k = 0; j + k <= kOrder; ++k) {
      acc += aj * c[k] * upow_jk;
      upow_jk *= u;
    }
    upow_j *= u;
  }
  return acc;
}

}  // namespace

SeriesResult hurwitz_zeta(Cplx s, Cplx z, const EvalConfig& cfg) {
  cfg.validate();
  if (std::abs(s - 1.0) < kPoleGuard) {
    throw std::domain_error("hurwitz_zeta: s too close to the pole at 1");
  }
  const EmEval em = em_eval(s, z, cfg);
  const Cplx pole = std::exp((1.0 - s) * em.log_a) / (s - 1.0);
  return finish(em.regular + pole, em.err, em.terms, Method::euler_maclaurin,
                em.branch_warning, cfg);
}

SeriesResult hurwitz_zeta_diff(Cplx s, Cplx za, Cplx zb, const EvalConfig& cfg) {
  cfg.validate();
  const EmEval ea = em_eval(s, za, cfg);
  const EmEval eb = em_eval(s, zb, cfg);
  // (a^(1-s) - b^(1-s)) / (s-1) without cancellation: with u = s-1 and
  // D = log a - log b, it equals e^(-u log b) (-D) (e^(-uD) - 1)/(-uD).
  const Cplx u = s - 1.0;
  const Cplx d = ea.log_a - eb.log_a;
  const Cplx pole = std::exp(-u * eb.log_a) * (-d) * expm1_over(-u * d);
  return finish(ea.regular - eb.regular + pole, ea.err + eb.err,
                ea.terms + eb.terms, Method::euler_maclaurin,
                ea.branch_warning || eb.branch_warning, cfg);
}

SeriesResult hurwitz_zeta_s_derivative(Cplx s0, Cplx z, const EvalConfig& cfg) {
  cfg.validate();
  if (std::abs(s0 - 1.0) <= cfg.contour_radius + kPoleGuard) {
    throw std::invalid_argument(
        "hurwitz_zeta_s_derivative: contour disk intersects the pole at s=1");
  }
  const auto coeffs = contour_taylor_coeffs(
      [&](Cplx s) { return hurwitz_zeta(s, z, cfg).value; }, s0,
      cfg.contour_radius, 1, cfg.contour_nodes);
  SeriesResult out;
  out.value = coeffs[1];
  out.error_estimate = 1e-13 * std::max(1.0, std::abs(out.value));
  out.terms_used = static_cast<std::size_t>(cfg.contour_nodes);
  out.method = Method::contour;
  out.converged = true;
  return out;
}

SeriesResult riemann_zeta(Cplx s, const EvalConfig& cfg) {
  return hurwitz_zeta(s, Cplx(1.0, 0.0), cfg);
}

SeriesResult dirichlet_eta(Cplx s, const EvalConfig& cfg) {
  cfg.validate();
  const Cplx u = s - 1.0;
  if (std::abs(u) < kEtaSwitch) {
    SeriesResult out;
    out.value = eta_near_one(u);
    out.error_estimate = 1e-14 * std::max(1.0, std::abs(out.value));
    out.terms_used = zeta_stieltjes_coeffs().size();
    out.method = Method::euler_maclaurin;
    out.converged = true;
    return out;
  }
  SeriesResult out = riemann_zeta(s, cfg);
  const Cplx factor = -cexpm1((1.0 - s) * std::numbers::ln2);  // 1 - 2^(1-s)
  out.value *= factor;
  out.error_estimate *= std::abs(factor);
  return out;
}

SeriesResult eta_prime_zero(const EvalConfig& cfg) {
  cfg.validate();
  const auto coeffs = contour_taylor_coeffs(
      [&](Cplx s) { return dirichlet_eta(s, cfg).value; }, Cplx(0.0, 0.0),
      cfg.contour_radius, 1, cfg.contour_nodes);
  SeriesResult out;
  out.value = coeffs[1];
  out.error_estimate = 1e-13;
  out.terms_used = static_cast<std::size_t>(cfg.contour_nodes);
  out.method = Method::contour;
  out.converged = true;
  return out;
}

SeriesResult alt_hurwitz_zeta(Cplx s, Cplx z, AltZetaMethod method,
                              const EvalConfig& cfg) {
  cfg.validate();
  if (near_nonpos_int(z)) {
    throw std::domain_error("alt_hurwitz_zeta: z is a non-positive integer");
  }
  if (method == AltZetaMethod::direct) {
    if (s.real() <= 0.0) {
      throw std::domain_error("alt_hurwitz_zeta: direct method needs Re(s) > 0");
    }
    return alt_sum(
        [&](long long m) {
          const double sign = (m % 2 == 0) ? 1.0 : -1.0;
          return sign * std::exp(-s * std::log(z + static_cast<double>(m)));
        },
        0, cfg);
  }
  // 2^(-s) (zeta(s, z/2) - zeta(s, (z+1)/2)); the pair evaluation keeps the
  // difference finite and smooth across s=1.
  SeriesResult out = hurwitz_zeta_diff(s, 0.5 * z, 0.5 * (z + 1.0), cfg);
  const Cplx scale = std::exp(-s * std::numbers::ln2);
  out.value *= scale;
  out.error_estimate *= std::abs(scale);
  return out;
}

}  // namespace regprod
