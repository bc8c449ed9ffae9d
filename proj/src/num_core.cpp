#include "regprod/num_core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace regprod {

const char* method_name(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::paired: return "paired";
    case Method::richardson: return "richardson";
    case Method::eta_expansion: return "eta-expansion";
    case Method::euler_maclaurin: return "euler-maclaurin";
    case Method::contour: return "contour";
  }
  return "unknown";
}

void EvalConfig::validate() const {
  if (!(target_rel_error > 0.0)) {
    throw std::invalid_argument("EvalConfig: target_rel_error must be positive");
  }
  if (max_terms == 0) {
    throw std::invalid_argument("EvalConfig: max_terms must be positive");
  }
  if (em_bernoulli_terms <= 0) {
    throw std::invalid_argument("EvalConfig: em_bernoulli_terms must be positive");
  }
  if (!(shift_threshold > 0.0)) {
    throw std::invalid_argument("EvalConfig: shift_threshold must be positive");
  }
  if (!(contour_radius > 0.0) || contour_radius >= 1.0) {
    throw std::invalid_argument("EvalConfig: contour_radius must lie in (0, 1)");
  }
  if (contour_nodes <= 0) {
    throw std::invalid_argument("EvalConfig: contour_nodes must be positive");
  }
}

namespace {

constexpr int kMaxBernoulli = 64;

std::vector<double> make_bernoulli_table() {
  using Rat = boost::multiprecision::cpp_rational;
  std::vector<Rat> b(kMaxBernoulli + 1);
  b[0] = 1;
  for (int n = 1; n <= kMaxBernoulli; ++n) {
    // B_n = -1/(n+1) sum_{k=0}^{n-1} C(n+1, k) B_k
    Rat acc = 0;
    Rat binom = 1;  // C(n+1, 0)
    for (int k = 0; k < n; ++k) {
      if (k > 0) binom = binom * (n + 2 - k) / k;
      acc += binom * b[k];
    }
    b[n] = -acc / (n + 1);
  }
  std::vector<double> out(kMaxBernoulli + 1);
  for (int n = 0; n <= kMaxBernoulli; ++n) out[n] = static_cast<double>(b[n]);
  return out;
}

const std::vector<double>& bernoulli_table() {
  static const std::vector<double> table = make_bernoulli_table();
  return table;
}

}  // namespace

std::vector<double> bernoulli_numbers(int count) {
  if (count < 0 || count > kMaxBernoulli) {
    throw std::invalid_argument("bernoulli_numbers: count must lie in [0, 64]");
  }
  const auto& table = bernoulli_table();
  return std::vector<double>(table.begin(), table.begin() + count + 1);
}

SeriesResult alt_sum(const std::function<Cplx(long long)>& term,
                     long long start, const EvalConfig& cfg) {
  cfg.validate();

  // Euler/van Wijngaarden transformation: maintain the repeatedly
  // pair-averaged tail estimates and deepen the averaging whenever it
  // keeps shrinking the correction.
  std::vector<Cplx> w;
  w.reserve(64);
  KahanSum sum;
  std::size_t n = 0;
  double last_corr = std::numeric_limits<double>::infinity();
  double prev_corr = std::numeric_limits<double>::infinity();
  int quiet = 0;
  std::size_t used = 0;
  bool converged = false;

  for (long long j = start; used < cfg.max_terms; ++j) {
    const Cplx t = term(j);
    ++used;
    Cplx corr;
    if (n == 0) {
      w.push_back(t);
      n = 1;
      corr = 0.5 * t;
      sum.add(corr);
    } else {
      Cplx carry = w[0];
      w[0] = t;
      for (std::size_t i = 1; i < n; ++i) {
        const Cplx next = w[i];
        w[i] = 0.5 * (w[i - 1] + carry);
        carry = next;
      }
      const Cplx deeper = 0.5 * (w[n - 1] + carry);
      if (std::abs(deeper) <= std::abs(w[n - 1])) {
        w.push_back(deeper);
        ++n;
        corr = 0.5 * deeper;
      } else {
        corr = deeper;
      }
      sum.add(corr);
    }

    prev_corr = last_corr;
    last_corr = std::abs(corr);
    const double scale = std::max(std::abs(sum.value()), 1e-300);
    if (last_corr <= cfg.target_rel_error * scale) {
      if (++quiet >= 3 && used >= 4) {
        converged = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }

  SeriesResult out;
  out.value = sum.value();
  out.error_estimate = std::isfinite(last_corr)
                           ? std::max(last_corr, prev_corr) +
                                 std::numeric_limits<double>::epsilon() *
                                     std::abs(out.value)
                           : std::numeric_limits<double>::infinity();
  out.terms_used = used;
  out.method = Method::paired;
  out.converged = converged;
  return out;
}

Cplx richardson_extrapolate(const std::vector<Cplx>& partials, int order) {
  if (order <= 0) {
    throw std::invalid_argument("richardson_extrapolate: order must be positive");
  }
  if (partials.size() < static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument(
        "richardson_extrapolate: need at least order+1 samples");
  }
  // Last order+1 samples, assumed at truncation points M, 2M, 4M, ...
  std::vector<Cplx> r(partials.end() - (order + 1), partials.end());
  for (int j = 1; j <= order; ++j) {
    const double denom = std::ldexp(1.0, j) - 1.0;  // 2^j - 1
    for (std::size_t i = r.size() - 1; i >= static_cast<std::size_t>(j); --i) {
      r[i] = r[i] + (r[i] - r[i - 1]) / denom;
    }
  }
  return r.back();
}

std::vector<Cplx> contour_taylor_coeffs(const std::function<Cplx(Cplx)>& f,
                                        Cplx center, double radius, int k_max,
                                        int nodes) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("contour_taylor_coeffs: radius must be positive");
  }
  if (k_max < 0) {
    throw std::invalid_argument("contour_taylor_coeffs: k_max must be >= 0");
  }
  if (nodes < 4 * (k_max + 1)) {
    throw std::invalid_argument("contour_taylor_coeffs: nodes too small");
  }

  std::vector<Cplx> fv(nodes);
  for (int t = 0; t < nodes; ++t) {
    const double theta = 2.0 * std::numbers::pi * t / nodes;
    fv[t] = f(center + std::polar(radius, theta));
  }

  std::vector<Cplx> coeffs(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    KahanSum acc;
    for (int t = 0; t < nodes; ++t) {
      const double theta = 2.0 * std::numbers::pi * t / nodes;
      acc.add(fv[t] * std::polar(1.0, -k * theta));
    }
    coeffs[k] = acc.value() / (static_cast<double>(nodes) * std::pow(radius, k));
  }
  return coeffs;
}

}  // namespace regprod
