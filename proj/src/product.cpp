#include "regprod/product.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "regprod/gamma.hpp"
#include "regprod/num_core.hpp"
#include "regprod/zeta.hpp"

namespace regprod {

namespace {

bool near_nonpos_int(Cplx z, double tol = 1e-12) {
  if (z.real() > 0.5) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol;
}

double max_shift_abs(const ProductSpec& spec) {
  double m = 0.0;
  for (const Cplx& z : spec.shifts) m = std::max(m, std::abs(z));
  return m;
}

std::string fmt17(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Alternating tail sum_{m > c} (-1)^(m+1) m^(-k), computed directly so the
// tiny tail never appears as a difference of two O(1) quantities.
double eta_tail(long long c, int k, const EvalConfig& cfg) {
  const SeriesResult r = alt_sum(
      [&](long long m) {
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        return Cplx(sign * std::pow(static_cast<double>(m), -k), 0.0);
      },
      c + 1, cfg);
  return r.value.real();
}

VerificationReport make_report(Identity id, Cplx lhs, Cplx rhs, double tol) {
  VerificationReport rep;
  rep.identity = id;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_err = std::abs(lhs - rhs);
  rep.rel_err = std::abs(rhs) > 0.0
                    ? rep.abs_err / std::abs(rhs)
                    : std::numeric_limits<double>::infinity();
  rep.tol = tol;
  // Relative tolerance, switching to absolute near zeros of the RHS.
  rep.pass = std::abs(rhs) < 1e-8 ? rep.abs_err <= tol : rep.rel_err <= tol;
  return rep;
}

}  // namespace

const char* identity_name(Identity id) {
  switch (id) {
    case Identity::mizuno: return "mizuno";
    case Identity::lerch: return "lerch";
    case Identity::lerch_qi: return "lerch_qi";
    case Identity::kurokawa_wakayama: return "kurokawa_wakayama";
    case Identity::wallis: return "wallis";
    case Identity::classical_lerch: return "classical_lerch";
  }
  return "unknown";
}

void ProductSpec::validate() const {
  if (shifts.empty()) {
    throw std::invalid_argument("ProductSpec: shifts must be non-empty");
  }
  for (const Cplx& z : shifts) {
    if (near_nonpos_int(z)) {
      throw std::invalid_argument(
          "ProductSpec: shift at a non-positive integer");
    }
  }
  if (cutoff_c >= 0) {
    for (const Cplx& z : shifts) {
      if (!(std::abs(z) / (static_cast<double>(cutoff_c) + 1.0) < 1.0)) {
        throw std::invalid_argument(
            "ProductSpec: cutoff violates |z_j|/(c+1) < 1");
      }
    }
  }
}

long long ProductSpec::resolved_cutoff() const {
  if (cutoff_c >= 0) return cutoff_c;
  return std::max<long long>(
      10, static_cast<long long>(std::ceil(2.0 * max_shift_abs(*this))));
}

SeriesResult lambda_star(Cplx s, const ProductSpec& spec, const EvalConfig& cfg) {
  cfg.validate();
  spec.validate();
  if (s.real() <= 0.0) {
    throw std::domain_error("lambda_star: requires Re(s) > 0");
  }
  return alt_sum(
      [&](long long m) {
        Cplx logprod{0.0, 0.0};
        for (const Cplx& z : spec.shifts) {
          logprod += std::log(z + static_cast<double>(m));
        }
        const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^(m+1)
        return sign * std::exp(-s * logprod);
      },
      0, cfg);
}

SeriesResult lambda_star_deriv_zero(const ProductSpec& spec,
                                    const EvalConfig& cfg, TailMethod tail) {
  cfg.validate();
  spec.validate();
  const long long c = spec.resolved_cutoff();
  for (const Cplx& z : spec.shifts) {
    if (!(std::abs(z) / (static_cast<double>(c) + 1.0) < 1.0)) {
      throw std::invalid_argument(
          "lambda_star_deriv_zero: cutoff violates |z_j|/(c+1) < 1");
    }
  }
  const std::size_t n = spec.n();
  Cplx shift_sum{0.0, 0.0};
  for (const Cplx& z : spec.shifts) shift_sum += z;

  bool branch = false;
  double err = 0.0;
  std::size_t terms = 0;

  // Head: sum_{m=0}^{c} (-1)^m sum_j Log(m + z_j).
  KahanSum t1;
  for (long long m = 0; m <= c; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    for (const Cplx& z : spec.shifts) {
      const Cplx w = z + static_cast<double>(m);
      if (w.real() <= 0.0) branch = true;
      t1.add(sign * std::log(w));
    }
  }
  terms += static_cast<std::size_t>(c + 1) * n;

  // Compensating sums up to the cutoff:
  // sum_{m=1}^{c} (-1)^(m+1) (n log m + (sum_j z_j)/m).
  KahanSum t2;
  for (long long m = 1; m <= c; ++m) {
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    t2.add(sign * (static_cast<double>(n) * std::log(static_cast<double>(m)) +
                   shift_sum / static_cast<double>(m)));
  }

  // Tail: -sum_j sum_{m>c} (-1)^(m+1) [Log(1 + z_j/m) - z_j/m].
  KahanSum t3;
  Method tail_tag = Method::eta_expansion;
  if (tail == TailMethod::eta_expansion) {
    // Log(1+w) - w = sum_{k>=2} (-1)^(k+1) w^k / k; swapping sums turns the
    // tail into a finite geometric sum over k with alternating eta tails.
    std::map<int, double> tails;
    for (const Cplx& z : spec.shifts) {
      const double ratio = std::abs(z) / (static_cast<double>(c) + 1.0);
      KahanSum acc;
      Cplx zpow = z;  // z^k as k advances
      double bound = ratio;
      for (int k = 2; k <= 500; ++k) {
        zpow *= z;
        bound *= ratio;
        auto it = tails.find(k);
        if (it == tails.end()) {
          it = tails.emplace(k, eta_tail(c, k, cfg)).first;
        }
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^(k+1)
        acc.add(sign * zpow / static_cast<double>(k) * it->second);
        ++terms;
        if (bound / k < 1e-17 && k > 4) break;
      }
      err += bound;
      t3.add(-acc.value());
    }
  } else {
    tail_tag = Method::paired;
    for (const Cplx& z : spec.shifts) {
      const SeriesResult r = alt_sum(
          [&](long long m) {
            const double sign = (m % 2 == 1) ? 1.0 : -1.0;
            const Cplx w = z / static_cast<double>(m);
            return sign * (std::log(1.0 + w) - w);
          },
          c + 1, cfg);
      t3.add(-r.value);
      err += r.error_estimate;
      terms += r.terms_used;
    }
  }

  // Boundary terms: n eta'(0) - (sum_j z_j) eta(1).
  const Cplx t4 = static_cast<double>(n) * 0.5 * std::log(std::numbers::pi / 2.0) -
                  shift_sum * std::numbers::ln2;

  SeriesResult out;
  out.value = t1.value() + t2.value() + t3.value() + t4;
  out.error_estimate =
      err + 1e-14 * (1.0 + std::abs(out.value)) * std::sqrt(1.0 + c);
  out.terms_used = terms;
  out.method = tail_tag;
  out.converged =
      out.error_estimate <= cfg.target_rel_error * std::max(1.0, std::abs(out.value)) * 100.0;
  out.branch_warning = branch;
  return out;
}

SeriesResult reg_alt_product(const ProductSpec& spec, const EvalConfig& cfg,
                             TailMethod tail) {
  SeriesResult out = lambda_star_deriv_zero(spec, cfg, tail);
  const Cplx v = std::exp(out.value);
  out.error_estimate = out.error_estimate * std::abs(v);
  out.value = v;
  return out;
}

SeriesResult mizuno_rhs(const ProductSpec& spec, const EvalConfig& cfg) {
  cfg.validate();
  spec.validate();
  Cplx logval = 0.5 * static_cast<double>(spec.n()) *
                std::log(std::numbers::pi / 2.0);
  for (const Cplx& z : spec.shifts) {
    logval -= log_gamma_tilde(z);
  }
  SeriesResult out;
  out.value = std::exp(logval);
  out.error_estimate = 1e-13 * (1.0 + std::abs(logval)) * std::abs(out.value);
  out.terms_used = spec.n();
  out.method = Method::direct;
  out.converged = true;
  return out;
}

VerificationReport verify_mizuno(const ProductSpec& spec, double tol,
                                 const EvalConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const SeriesResult lhs = reg_alt_product(spec, cfg);
  const SeriesResult rhs = mizuno_rhs(spec, cfg);
  const auto t1 = std::chrono::steady_clock::now();

  VerificationReport rep = make_report(Identity::mizuno, lhs.value, rhs.value, tol);
  rep.metadata["cutoff"] = std::to_string(spec.resolved_cutoff());
  rep.metadata["terms"] = std::to_string(lhs.terms_used);
  rep.metadata["lhs_method"] = method_name(lhs.method);
  rep.metadata["rhs_method"] = "closed_form";
  rep.metadata["runtime_ms"] = fmt17(
      std::chrono::duration<double, std::milli>(t1 - t0).count());
  if (lhs.branch_warning) rep.metadata["branch_warning"] = "true";
  return rep;
}

std::vector<Cplx> roots_of_unity(int n) {
  if (n < 1) throw std::invalid_argument("roots_of_unity: n must be >= 1");
  std::vector<Cplx> roots(n);
  for (int j = 0; j < n; ++j) {
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
  }
  return roots;
}

VerificationReport kurokawa_wakayama(int n, Cplx x, Cplx y, double tol,
                                     const EvalConfig& cfg) {
  if (n < 1) throw std::invalid_argument("kurokawa_wakayama: n must be >= 1");
  ProductSpec spec;
  const auto roots = roots_of_unity(n);
  for (const Cplx& zeta : roots) spec.shifts.push_back(x - zeta * y);
  for (const Cplx& z : spec.shifts) {
    if (near_nonpos_int(z)) {
      throw std::domain_error("kurokawa_wakayama: degenerate shift");
    }
  }

  VerificationReport rep = verify_mizuno(spec, tol, cfg);
  rep.identity = Identity::kurokawa_wakayama;

  // Roots-of-unity factorization sanity: prod_j (m+x-zeta^j y) must equal
  // (m+x)^n - y^n exactly (to roundoff) for small integer m.
  double poly_max_rel = 0.0;
  for (int m = 0; m <= 5; ++m) {
    Cplx prod{1.0, 0.0};
    for (const Cplx& z : spec.shifts) prod *= z + static_cast<double>(m);
    const Cplx expect = std::pow(x + static_cast<double>(m),
                                 static_cast<double>(n)) -
                        std::pow(y, static_cast<double>(n));
    const double scale = std::max(std::abs(expect), 1e-30);
    poly_max_rel = std::max(poly_max_rel, std::abs(prod - expect) / scale);
  }
  rep.metadata["poly_identity_max_rel"] = fmt17(poly_max_rel);
  if (poly_max_rel > 1e-12) rep.pass = false;
  return rep;
}

SeriesResult wallis_partial(long long pairs) {
  if (pairs < 1) throw std::invalid_argument("wallis_partial: pairs must be >= 1");
  // prod_{k=1}^{2*pairs} (k/(k+1))^((-1)^k) accumulated pairwise in log space.
  KahanSum logsum;
  for (long long j = 1; j <= pairs; ++j) {
    const double a = static_cast<double>(2 * j);
    logsum.add(Cplx(2.0 * std::log(a) - std::log(a - 1.0) - std::log(a + 1.0),
                    0.0));
  }
  SeriesResult out;
  out.value = std::exp(logsum.value());
  out.terms_used = static_cast<std::size_t>(2 * pairs);
  out.method = Method::direct;
  // Leading truncation error of the partial product is O(1/M).
  out.error_estimate = std::abs(out.value) / (2.0 * static_cast<double>(pairs));
  out.converged = false;
  return out;
}

std::vector<Cplx> wallis_dyadic_partials(long long max_pairs, int levels) {
  if (levels < 1 || max_pairs < (1LL << (levels - 1))) {
    throw std::invalid_argument("wallis_dyadic_partials: bad sample layout");
  }
  std::vector<Cplx> out;
  KahanSum logsum;
  long long done = 0;
  for (int level = levels - 1; level >= 0; --level) {
    const long long upto = max_pairs >> level;
    for (long long j = done + 1; j <= upto; ++j) {
      const double a = static_cast<double>(2 * j);
      logsum.add(Cplx(2.0 * std::log(a) - std::log(a - 1.0) - std::log(a + 1.0),
                      0.0));
    }
    done = upto;
    out.push_back(std::exp(logsum.value()));
  }
  return out;
}

SeriesResult wallis_extrapolated(long long max_pairs) {
  const auto partials = wallis_dyadic_partials(max_pairs, 4);
  SeriesResult out;
  out.value = richardson_extrapolate(partials, 3);
  const Cplx lower = richardson_extrapolate(
      std::vector<Cplx>(partials.begin() + 1, partials.end()), 2);
  out.error_estimate = std::abs(out.value - lower) +
                       1e-15 * std::sqrt(static_cast<double>(max_pairs));
  out.terms_used = static_cast<std::size_t>(2 * max_pairs);
  out.method = Method::richardson;
  out.converged = true;
  return out;
}

VerificationReport verify_wallis(long long pairs, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const SeriesResult lhs = wallis_extrapolated(pairs);
  const auto t1 = std::chrono::steady_clock::now();
  VerificationReport rep = make_report(
      Identity::wallis, lhs.value, Cplx(std::numbers::pi / 2.0, 0.0), tol);
  rep.metadata["pairs"] = std::to_string(pairs);
  rep.metadata["raw_partial"] = fmt17(wallis_partial(pairs).value.real());
  rep.metadata["runtime_ms"] = fmt17(
      std::chrono::duration<double, std::milli>(t1 - t0).count());
  return rep;
}

SeriesResult geometric_mean_oracle(const ProductSpec& spec, long long M) {
  spec.validate();
  if (M < 8) throw std::invalid_argument("geometric_mean_oracle: M must be >= 8");

  // G(M) = (log P_{2M} + log P_{2M+1}) / 2 with
  // log P_N = sum_{m=0}^{N} (-1)^m sum_j Log(m + z_j); sampled at dyadic M
  // and Richardson-extrapolated.
  const long long m0 = M / 8;
  std::vector<Cplx> samples;
  KahanSum logsum;  // running sum through m (inclusive)
  long long m_done = -1;
  for (int level = 0; level < 4; ++level) {
    const long long mk = m0 << level;
    // advance the alternating log sum through m = 2*mk + 1
    for (long long m = m_done + 1; m <= 2 * mk + 1; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      for (const Cplx& z : spec.shifts) {
        logsum.add(sign * std::log(z + static_cast<double>(m)));
      }
      if (m == 2 * mk) {
        // snapshot of log P_{2M}; the next step adds the odd term
        samples.push_back(logsum.value());
      }
    }
    m_done = 2 * mk + 1;
    samples.back() = 0.5 * (samples.back() + logsum.value());
  }

  SeriesResult out;
  const Cplx g = richardson_extrapolate(samples, 3);
  const Cplx lower = richardson_extrapolate(
      std::vector<Cplx>(samples.begin() + 1, samples.end()), 2);
  out.value = std::exp(g);
  out.error_estimate = (std::abs(g - lower) + 1e-13) * std::abs(out.value);
  out.terms_used = static_cast<std::size_t>(m_done + 1) * spec.n();
  out.method = Method::richardson;
  out.converged = true;
  return out;
}

VerificationReport classical_lerch_check(Cplx z, double tol,
                                         const EvalConfig& cfg) {
  if (z.real() <= 0.0) {
    throw std::domain_error("classical_lerch_check: requires Re(z) > 0");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Cplx dz = hurwitz_zeta_s_derivative(Cplx(0.0, 0.0), z, cfg).value;
  // Regularized prod (m+z) = exp(-zeta'(0, z)); classical Lerch says it
  // equals sqrt(2 pi) / Gamma(z).
  const Cplx lhs = std::exp(-dz);
  const Cplx rhs = std::sqrt(2.0 * std::numbers::pi) *
                   std::exp(-classical_log_gamma(z));
  const auto t1 = std::chrono::steady_clock::now();

  VerificationReport rep = make_report(Identity::classical_lerch, lhs, rhs, tol);
  const Cplx d1 = hurwitz_zeta_s_derivative(Cplx(0.0, 0.0), Cplx(1.0, 0.0), cfg).value;
  const Cplx gamma_via_zeta = std::exp(dz - d1);
  const Cplx gamma_cl = std::exp(classical_log_gamma(z));
  rep.metadata["zeta_prime_zero"] = fmt17(d1.real());
  rep.metadata["gamma_route_rel_err"] =
      fmt17(std::abs(gamma_via_zeta - gamma_cl) / std::abs(gamma_cl));
  rep.metadata["runtime_ms"] = fmt17(
      std::chrono::duration<double, std::milli>(t1 - t0).count());
  return rep;
}

std::vector<VerificationReport> verify_suite(std::uint64_t seed, int cases,
                                             double tol, const EvalConfig& cfg) {
  if (cases < 1) throw std::invalid_argument("verify_suite: cases must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(1, 4);
  std::uniform_real_distribution<double> re_dist(0.2, 5.0);
  std::uniform_real_distribution<double> im_dist(-5.0, 5.0);

  std::vector<VerificationReport> reports;
  reports.reserve(cases);
  for (int i = 0; i < cases; ++i) {
    ProductSpec spec;
    const int n = n_dist(rng);
    for (int j = 0; j < n; ++j) {
      spec.shifts.emplace_back(re_dist(rng), im_dist(rng));
    }
    VerificationReport rep = verify_mizuno(spec, tol, cfg);
    rep.metadata["case"] = std::to_string(i);
    rep.metadata["seed"] = std::to_string(seed);
    std::ostringstream shifts;
    shifts.precision(17);
    for (std::size_t j = 0; j < spec.shifts.size(); ++j) {
      if (j) shifts << ";";
      shifts << spec.shifts[j].real() << "+" << spec.shifts[j].imag() << "i";
    }
    rep.metadata["shifts"] = shifts.str();
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace regprod
