// Acceptance gate: one line per criterion, exit 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "regprod/gamma.hpp"
#include "regprod/num_core.hpp"
#include "regprod/product.hpp"
#include "regprod/zeta.hpp"

using namespace regprod;

namespace {

int failures = 0;

void report(int id, const char* label, bool ok, const std::string& detail) {
  std::printf("%s  criterion %2d  %-38s %s\n", ok ? "PASS" : "FAIL", id, label,
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

double rel(Cplx got, Cplx expect) {
  return std::abs(got - expect) / std::max(1e-300, std::abs(expect));
}

double now_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

const EvalConfig cfg{};

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const double closed_err =
      rel(gamma_tilde(1.0, GammaTildeRoute::closed_form, cfg).value,
          Cplx(std::numbers::pi / 2.0, 0.0));
  const double product_err =
      rel(gamma_tilde(1.0, GammaTildeRoute::weierstrass_product, cfg).value,
          Cplx(std::numbers::pi / 2.0, 0.0));
  const double ms = now_ms(t0);
  const bool ok = closed_err <= 1e-12 && product_err <= 1e-6 && ms < 1000.0;
  report(1, "normalization at z=1, both routes", ok,
         "closed=" + fmt(closed_err) + " product=" + fmt(product_err) +
             " runtime=" + fmt(ms) + "ms");
}

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = verify_suite(42, 100, 1e-8, cfg);
  const double ms = now_ms(t0);
  int passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;
  const bool ok = passed == 100 && ms < 60000.0;
  report(2, "randomized identity sweep, 100 cases", ok,
         std::to_string(passed) + "/100 runtime=" + fmt(ms) + "ms");
}

void criterion3() {
  const double target = std::numbers::pi / 2.0;
  bool ratios_ok = true;
  double worst_ratio = 2.0;
  double prev = target - wallis_partial(1000).value.real();
  for (long long pairs : {2000, 4000, 8000, 16000}) {
    const double err = target - wallis_partial(pairs).value.real();
    const double ratio = prev / err;
    if (std::abs(ratio - 2.0) > std::abs(worst_ratio - 2.0)) worst_ratio = ratio;
    if (ratio < 1.8 || ratio > 2.2) ratios_ok = false;
    prev = err;
  }
  const auto extr = wallis_extrapolated(50000);  // 1e5 factors
  const double extr_err = std::abs(extr.value.real() - target);
  const bool ok = ratios_ok && extr_err <= 1e-9;
  report(3, "Wallis: O(1/M) rate and extrapolation", ok,
         "ratio=" + fmt(worst_ratio) + " extrapolated_err=" + fmt(extr_err));
}

void criterion4() {
  const double eta_d0 = eta_prime_zero(cfg).value.real();
  const double eta_err =
      std::abs(eta_d0 - 0.5 * std::log(std::numbers::pi / 2.0));

  const double a = mod_euler_const(cfg).value.real();
  const double b = dirichlet_eta(1.0, cfg).value.real();
  const double c = -psi_tilde(1.0).real();
  double worst = 0.0;
  for (double v : {a, b, c}) {
    worst = std::max(worst, std::abs(v - std::numbers::ln2));
  }
  worst = std::max({worst, std::abs(a - b), std::abs(a - c)});
  const bool ok = eta_err <= 1e-9 && worst <= 1e-10;
  report(4, "eta'(0) and the modified Euler constant", ok,
         "eta_prime_err=" + fmt(eta_err) + " const_err=" + fmt(worst));
}

void criterion5() {
  double worst = 0.0;
  const std::vector<Cplx> zs{Cplx(0.3, 0.0), Cplx(1.0, 0.0), Cplx(2.5, 0.0),
                             Cplx(1.0, 2.0)};
  for (double re = 0.25; re <= 6.0; re += 1.15) {
    for (double im = -3.0; im <= 3.0; im += 1.5) {
      const Cplx s(re, im);
      for (const Cplx& z : zs) {
        const Cplx split = alt_hurwitz_zeta(s, z, AltZetaMethod::split, cfg).value;
        const Cplx direct =
            alt_hurwitz_zeta(s, z, AltZetaMethod::direct, cfg).value;
        worst = std::max(worst, rel(direct, split));
      }
    }
  }
  report(5, "split vs direct alternating zeta grid", worst <= 1e-11,
         "max_rel_diff=" + fmt(worst));
}

void criterion6() {
  const std::vector<Cplx> zs{Cplx(0.5, 0.0), Cplx(1.0, 0.0), Cplx(2.0, 0.0),
                             Cplx(1.0, 1.0)};
  double worst0 = 0.0, worst1 = 0.0, worst2 = 0.0;
  const double h0 = 1e-6, h1 = 1e-5;
  for (const Cplx& z : zs) {
    const Cplx fd0 = (std::log(gamma_tilde(z + h0, cfg).value) -
                      std::log(gamma_tilde(z - h0, cfg).value)) /
                     (2.0 * h0);
    worst0 = std::max(worst0, rel(fd0, psi_tilde(z)));
    const Cplx fd1 = (psi_tilde(z + h1) - psi_tilde(z - h1)) / (2.0 * h1);
    worst1 = std::max(worst1, rel(fd1, psi_tilde_n(1, z, cfg)));
    const Cplx fd2 =
        (psi_tilde_n(1, z + h1, cfg) - psi_tilde_n(1, z - h1, cfg)) / (2.0 * h1);
    worst2 = std::max(worst2, rel(fd2, psi_tilde_n(2, z, cfg)));
  }
  const bool ok = worst0 <= 1e-7 && worst1 <= 1e-5 && worst2 <= 1e-5;
  report(6, "derivative tower vs finite differences", ok,
         "d0=" + fmt(worst0) + " d1=" + fmt(worst1) + " d2=" + fmt(worst2));
}

void criterion7() {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Cplx z(0.25 + 0.22 * i, static_cast<double>(i % 5) - 2.0);
    const Cplx lhs = gamma_tilde(z, cfg).value * gamma_tilde(z + 1.0, cfg).value;
    worst = std::max(worst, rel(lhs, std::numbers::pi / (2.0 * z)));
  }
  report(7, "functional equation on 20 points", worst <= 1e-10,
         "max_rel=" + fmt(worst));
}

void criterion8() {
  bool all_pass = true;
  double worst_poly = 0.0;
  for (int n : {1, 2, 3, 4, 6}) {
    const auto rep =
        kurokawa_wakayama(n, Cplx(2.0, 0.0), Cplx(0.5, 0.0), 1e-8, cfg);
    all_pass = all_pass && rep.pass;
    worst_poly =
        std::max(worst_poly, std::stod(rep.metadata.at("poly_identity_max_rel")));
  }
  const bool ok = all_pass && worst_poly <= 1e-12;
  report(8, "roots-of-unity identity, n in {1,2,3,4,6}", ok,
         std::string(all_pass ? "all pass" : "identity FAILED") +
             " poly_max_rel=" + fmt(worst_poly));
}

void criterion9() {
  const double zeta_d0 = hurwitz_zeta_s_derivative(0.0, 1.0, cfg).value.real();
  const double zeta_err =
      std::abs(zeta_d0 + 0.5 * std::log(2.0 * std::numbers::pi));
  double worst = 0.0;
  for (double z : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    const double d = hurwitz_zeta_s_derivative(0.0, z, cfg).value.real();
    const double got = std::exp(d - zeta_d0);
    const double expect = std::exp(classical_log_gamma(z).real());
    worst = std::max(worst, std::abs(got - expect) / expect);
  }
  const bool ok = zeta_err <= 1e-10 && worst <= 1e-8;
  report(9, "classical product formula cross-check", ok,
         "zeta_prime_err=" + fmt(zeta_err) + " gamma_rel=" + fmt(worst));
}

void criterion10() {
  double worst = 0.0;
  for (const ProductSpec& spec :
       {ProductSpec{{Cplx(1.0, 0.0)}},
        ProductSpec{{Cplx(1.0, 0.0), Cplx(1.0, 0.0)}},
        ProductSpec{{Cplx(2.0, 0.0)}}}) {
    const Cplx oracle = geometric_mean_oracle(spec, 10000).value;
    const Cplx analytic = reg_alt_product(spec, cfg).value;
    worst = std::max(worst, rel(oracle, analytic));
  }
  report(10, "empirical regularization oracle", worst <= 1e-3,
         "max_rel=" + fmt(worst));
}

void criterion11() {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> re(0.2, 5.0), im(-5.0, 5.0);
  std::uniform_int_distribution<int> count(1, 3);
  double worst_cutoff = 0.0, worst_mult = 0.0;
  for (int trial = 0; trial < 8; ++trial) {
    ProductSpec a, b;
    const int na = count(rng), nb = count(rng);
    for (int j = 0; j < na; ++j) a.shifts.emplace_back(re(rng), im(rng));
    for (int j = 0; j < nb; ++j) b.shifts.emplace_back(re(rng), im(rng));

    const Cplx da = lambda_star_deriv_zero(a, cfg).value;
    ProductSpec moved = a;
    moved.cutoff_c = a.resolved_cutoff() + 25;
    worst_cutoff =
        std::max(worst_cutoff, std::abs(lambda_star_deriv_zero(moved, cfg).value - da) /
                                   std::max(1.0, std::abs(da)));

    ProductSpec joint;
    joint.shifts = a.shifts;
    joint.shifts.insert(joint.shifts.end(), b.shifts.begin(), b.shifts.end());
    const Cplx sum = da + lambda_star_deriv_zero(b, cfg).value;
    worst_mult =
        std::max(worst_mult, std::abs(lambda_star_deriv_zero(joint, cfg).value - sum) /
                                 std::max(1.0, std::abs(sum)));
  }
  const bool ok = worst_cutoff <= 1e-11 && worst_mult <= 1e-11;
  report(11, "cutoff invariance and multiplicativity", ok,
         "cutoff=" + fmt(worst_cutoff) + " mult=" + fmt(worst_mult));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (failures == 0) {
    std::printf("acceptance: 11/11 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
