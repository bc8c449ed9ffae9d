#include "regprod/gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "regprod/num_core.hpp"
#include "regprod/zeta.hpp"

namespace regprod {

namespace {

constexpr double kShiftThreshold = 12.0;

bool near_nonpos_int(Cplx z, double tol = 1e-12) {
  if (z.real() > 0.5) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Cplx classical_digamma(Cplx z) {
  if (near_nonpos_int(z)) {
    throw std::domain_error("classical_digamma: pole at a non-positive integer");
  }
  KahanSum rec;
  Cplx w = z;
  while (w.real() < kShiftThreshold) {
    rec.add(-1.0 / w);
    w += 1.0;
  }
  // psi(w) = log w - 1/(2w) - sum_k B_2k / (2k w^2k)
  const auto bern = bernoulli_numbers(24);
  const Cplx w2inv = 1.0 / (w * w);
  Cplx wpow = w2inv;
  KahanSum asy;
  asy.add(std::log(w));
  asy.add(-0.5 / w);
  for (int k = 1; k <= 10; ++k) {
    asy.add(-(bern[2 * k] / (2.0 * k)) * wpow);
    wpow *= w2inv;
  }
  return asy.value() + rec.value();
}

Cplx classical_log_gamma(Cplx z) {
  if (z.real() <= 0.0) {
    throw std::domain_error("classical_log_gamma: requires Re(z) > 0");
  }
  KahanSum rec;
  Cplx w = z;
  while (w.real() < kShiftThreshold) {
    rec.add(-std::log(w));
    w += 1.0;
  }
  // Stirling: (w - 1/2) log w - w + log(2 pi)/2
  //           + sum_k B_2k / (2k (2k-1) w^(2k-1))
  const auto bern = bernoulli_numbers(24);
  KahanSum asy;
  asy.add((w - 0.5) * std::log(w));
  asy.add(-w);
  asy.add(Cplx(0.5 * std::log(2.0 * std::numbers::pi), 0.0));
  const Cplx w2inv = 1.0 / (w * w);
  Cplx wpow = 1.0 / w;
  for (int k = 1; k <= 10; ++k) {
    asy.add(bern[2 * k] / (2.0 * k * (2.0 * k - 1.0)) * wpow);
    wpow *= w2inv;
  }
  return asy.value() + rec.value();
}

Cplx psi_tilde(Cplx z) {
  return -classical_digamma(z) + classical_digamma(0.5 * z) + std::numbers::ln2;
}

Cplx psi_tilde_n(int n, Cplx z, const EvalConfig& cfg) {
  if (n < 0 || n > 12) {
    throw std::invalid_argument("psi_tilde_n: n must lie in [0, 12]");
  }
  if (near_nonpos_int(z)) {
    throw std::domain_error("psi_tilde_n: pole at a non-positive integer");
  }
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
  const Cplx zeta_e =
      alt_hurwitz_zeta(Cplx(n + 1.0, 0.0), z, AltZetaMethod::split, cfg).value;
  return sign * factorial(n) * zeta_e;
}

Cplx log_gamma_tilde(Cplx z) {
  return (z - 2.0) * std::numbers::ln2 + 2.0 * classical_log_gamma(0.5 * z) -
         classical_log_gamma(z);
}

SeriesResult gamma_tilde(Cplx z, GammaTildeRoute route, const EvalConfig& cfg) {
  cfg.validate();
  if (near_nonpos_int(z)) {
    throw std::domain_error("gamma_tilde: pole at a non-positive integer");
  }

  SeriesResult out;
  switch (route) {
    case GammaTildeRoute::closed_form: {
      const Cplx lg = log_gamma_tilde(z);
      out.value = std::exp(lg);
      out.error_estimate =
          1e-14 * (1.0 + std::abs(lg)) * std::abs(out.value);
      out.terms_used = 1;
      out.method = Method::direct;
      out.converged = true;
      break;
    }
    case GammaTildeRoute::log_series: {
      // log G~ = -log z + g0 z + sum_k (-1)^k (z/k - log(1 + z/k))
      const SeriesResult tail = alt_sum(
          [&](long long k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const Cplx w = z / static_cast<double>(k);
            return sign * (w - std::log(1.0 + w));
          },
          1, cfg);
      const Cplx lg =
          -std::log(z) + std::numbers::ln2 * z + tail.value;
      out.value = std::exp(lg);
      out.error_estimate = (tail.error_estimate + 1e-15 * (1.0 + std::abs(lg))) *
                           std::abs(out.value);
      out.terms_used = tail.terms_used;
      out.method = Method::paired;
      out.converged = tail.converged;
      break;
    }
    case GammaTildeRoute::weierstrass_product: {
      // Truncated product with the factors m=2k-1 and m=2k paired before
      // logging; partial sums at dyadic pair counts, tail removed by
      // order-3 Richardson extrapolation.
      const SeriesResult g0 = mod_euler_const(cfg);
      const long long m0 = 1250;
      std::vector<Cplx> partials;
      KahanSum logsum;
      long long done = 0;
      for (int level = 0; level < 4; ++level) {
        const long long upto = m0 << level;
        for (long long k = done + 1; k <= upto; ++k) {
          const Cplx wa = z / static_cast<double>(2 * k - 1);
          const Cplx wb = z / static_cast<double>(2 * k);
          logsum.add(std::log(1.0 + wa) - wa - (std::log(1.0 + wb) - wb));
        }
        done = upto;
        partials.push_back(logsum.value());
      }
      const Cplx tail3 = richardson_extrapolate(partials, 3);
      const Cplx tail2 = richardson_extrapolate(
          std::vector<Cplx>(partials.begin() + 1, partials.end()), 2);
      const Cplx lg = -std::log(z) + g0.value * z + tail3;
      out.value = std::exp(lg);
      out.error_estimate =
          (std::abs(tail3 - tail2) + g0.error_estimate * std::abs(z)) *
              std::abs(out.value) +
          1e-14 * std::abs(out.value);
      out.terms_used = static_cast<std::size_t>(2 * done) + g0.terms_used;
      out.method = Method::richardson;
      out.converged = true;
      break;
    }
  }
  return out;
}

SeriesResult mod_euler_const(const EvalConfig& cfg) {
  cfg.validate();
  SeriesResult out = alt_sum(
      [](long long j) {
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        return Cplx(0.5 * sign / (static_cast<double>(j) * (j + 1.0)), 0.0);
      },
      1, cfg);
  out.value += 0.5;
  return out;
}

ModStieltjesResult mod_stieltjes(int k, Cplx z, const EvalConfig& cfg) {
  cfg.validate();
  if (k < 0 || k > 8) {
    throw std::invalid_argument("mod_stieltjes: k must lie in [0, 8]");
  }
  if (near_nonpos_int(z) || z.real() <= 0.0) {
    throw std::domain_error("mod_stieltjes: requires Re(z) > 0");
  }
  const auto coeffs = contour_taylor_coeffs(
      [&](Cplx s) {
        return alt_hurwitz_zeta(s, z, AltZetaMethod::split, cfg).value;
      },
      Cplx(1.0, 0.0), cfg.contour_radius, k, cfg.contour_nodes);
  ModStieltjesResult out;
  out.k = k;
  out.z = z;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  out.value = sign * factorial(k) * coeffs[k];
  out.error_estimate = 1e-12 * std::max(1.0, std::abs(out.value));
  return out;
}

}  // namespace regprod
