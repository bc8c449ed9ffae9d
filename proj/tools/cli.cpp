#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "regprod/gamma.hpp"
#include "regprod/num_core.hpp"
#include "regprod/product.hpp"
#include "regprod/zeta.hpp"

namespace regprod::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Non-finite values become explicit sentinels; JSON has no representation
// for them and they must never be silently dropped.
ordered_json num(double x) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "Infinity" : "-Infinity";
  return x;
}

ordered_json cnum(Cplx z) { return ordered_json::array({num(z.real()), num(z.imag())}); }

struct ResultRow {
  std::string kind;  // "series" or "verification"
  std::string name;
  std::optional<SeriesResult> series;
  std::optional<VerificationReport> verification;
  std::map<std::string, std::string> extra;
  double runtime_ms = 0.0;
};

struct Session {
  EvalConfig cfg;
  std::string format = "text";
  double tolerance = 1e-8;
  std::uint64_t seed = 42;
  std::vector<ResultRow> rows;
  bool raw_csv = false;           // table subcommand emits its own CSV
  std::ostringstream raw_output;  // content for raw_csv mode

  template <typename Fn>
  void timed(const std::string& kind, const std::string& name, Fn&& fn) {
    ResultRow row;
    row.kind = kind;
    row.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    fn(row);
    const auto t1 = std::chrono::steady_clock::now();
    row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (row.verification) {
      auto it = row.verification->metadata.find("runtime_ms");
      if (it != row.verification->metadata.end()) {
        row.runtime_ms = std::stod(it->second);
        row.verification->metadata.erase(it);
      }
    }
    rows.push_back(std::move(row));
  }
};

ordered_json series_json(const SeriesResult& r) {
  ordered_json j;
  j["value"] = cnum(r.value);
  j["error_estimate"] = num(r.error_estimate);
  j["terms_used"] = r.terms_used;
  j["method"] = method_name(r.method);
  j["converged"] = r.converged;
  if (r.branch_warning) j["branch_warning"] = true;
  return j;
}

ordered_json verification_json(const VerificationReport& r) {
  ordered_json j;
  j["identity"] = identity_name(r.identity);
  j["lhs"] = cnum(r.lhs);
  j["rhs"] = cnum(r.rhs);
  j["abs_err"] = num(r.abs_err);
  j["rel_err"] = num(r.rel_err);
  j["tol"] = num(r.tol);
  j["pass"] = r.pass;
  j["metadata"] = r.metadata;
  return j;
}

ordered_json config_json(const EvalConfig& cfg) {
  ordered_json j;
  j["target_rel_error"] = num(cfg.target_rel_error);
  j["max_terms"] = cfg.max_terms;
  j["em_bernoulli_terms"] = cfg.em_bernoulli_terms;
  j["shift_threshold"] = num(cfg.shift_threshold);
  j["contour_radius"] = num(cfg.contour_radius);
  j["contour_nodes"] = cfg.contour_nodes;
  return j;
}

void render_json(const Session& s, const std::vector<std::string>& args,
                 const std::string& subcommand, const std::string& target,
                 std::ostream& out) {
  ordered_json doc;
  doc["schema_version"] = "1";
  ordered_json req;
  req["argv"] = args;
  req["subcommand"] = subcommand;
  req["target"] = target;
  req["format"] = s.format;
  req["tolerance"] = num(s.tolerance);
  req["seed"] = s.seed;
  req["config"] = config_json(s.cfg);
  doc["request"] = req;

  ordered_json results = ordered_json::array();
  int pass = 0, fail = 0;
  for (const auto& row : s.rows) {
    ordered_json j;
    j["kind"] = row.kind;
    j["name"] = row.name;
    if (row.series) j.update(series_json(*row.series));
    if (row.verification) {
      j.update(verification_json(*row.verification));
      (row.verification->pass ? pass : fail) += 1;
    }
    for (const auto& [k, v] : row.extra) j[k] = v;
    j["runtime_ms"] = num(row.runtime_ms);
    results.push_back(std::move(j));
  }
  doc["results"] = results;
  doc["summary"] = {{"pass", pass}, {"fail", fail}};
  out << doc.dump(2) << "\n";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void render_csv(const Session& s, std::ostream& out) {
  out << "kind,name,value_re,value_im,lhs_re,lhs_im,rhs_re,rhs_im,"
         "abs_err,rel_err,tol,pass,error_estimate,terms_used,method,"
         "converged,runtime_ms\n";
  auto cell = [](double x) { return fmt17(x); };
  for (const auto& row : s.rows) {
    out << row.kind << "," << csv_escape(row.name) << ",";
    if (row.series) {
      out << cell(row.series->value.real()) << ","
          << cell(row.series->value.imag()) << ",,,,,,,,,"
          << cell(row.series->error_estimate) << ","
          << row.series->terms_used << "," << method_name(row.series->method)
          << "," << (row.series->converged ? "true" : "false") << ",";
    } else if (row.verification) {
      const auto& v = *row.verification;
      out << ",," << cell(v.lhs.real()) << "," << cell(v.lhs.imag()) << ","
          << cell(v.rhs.real()) << "," << cell(v.rhs.imag()) << ","
          << cell(v.abs_err) << "," << cell(v.rel_err) << "," << cell(v.tol)
          << "," << (v.pass ? "true" : "false") << ",,,,,";
    }
    out << cell(row.runtime_ms) << "\n";
  }
}

void render_text(const Session& s, std::ostream& out) {
  int pass = 0, fail = 0;
  for (const auto& row : s.rows) {
    if (row.series) {
      const auto& r = *row.series;
      out << row.name << " = " << fmt17(r.value.real());
      if (r.value.imag() != 0.0) out << " + " << fmt17(r.value.imag()) << "i";
      out << "  (err<=" << r.error_estimate << ", terms=" << r.terms_used
          << ", method=" << method_name(r.method)
          << (r.converged ? "" : ", NOT CONVERGED") << ")\n";
    } else if (row.verification) {
      const auto& v = *row.verification;
      (v.pass ? pass : fail) += 1;
      out << (v.pass ? "PASS" : "FAIL") << " " << identity_name(v.identity)
          << " [" << row.name << "]: lhs=(" << fmt17(v.lhs.real()) << ","
          << fmt17(v.lhs.imag()) << ") rhs=(" << fmt17(v.rhs.real()) << ","
          << fmt17(v.rhs.imag()) << ") rel_err=" << v.rel_err
          << " tol=" << v.tol << "\n";
    }
    for (const auto& [k, v] : row.extra) {
      out << "  " << k << "=" << v << "\n";
    }
  }
  if (pass + fail > 0) {
    out << "summary: pass=" << pass << " fail=" << fail << "\n";
  }
}

}  // namespace

Cplx parse_complex(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw std::invalid_argument("empty complex literal");

  auto parse_real = [](const std::string& u) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(u, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad numeric literal: '" + u + "'");
    }
    if (used != u.size()) {
      throw std::invalid_argument("bad numeric literal: '" + u + "'");
    }
    return v;
  };

  if (t.front() == '(') {
    if (t.back() != ')') throw std::invalid_argument("unbalanced parentheses");
    const std::string body = t.substr(1, t.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
      return Cplx(parse_real(body), 0.0);
    }
    return Cplx(parse_real(body.substr(0, comma)),
                parse_real(body.substr(comma + 1)));
  }

  // a+bi form: the split sign is a '+'/'-' that is neither leading nor an
  // exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
    }
  }
  auto parse_imag = [&](std::string u) {
    if (u.empty() || u.back() != 'i') {
      throw std::invalid_argument("imaginary part must end in 'i'");
    }
    u.pop_back();
    if (u.empty() || u == "+") return 1.0;
    if (u == "-") return -1.0;
    return parse_real(u);
  };

  if (t.back() == 'i') {
    if (split == std::string::npos) {
      return Cplx(0.0, parse_imag(t));
    }
    return Cplx(parse_real(t.substr(0, split)), parse_imag(t.substr(split)));
  }
  if (split != std::string::npos) {
    // something like "1+2" without the trailing i
    throw std::invalid_argument("bad complex literal: '" + text + "'");
  }
  return Cplx(parse_real(t), 0.0);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

namespace {

std::string cplx_name(Cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Session session;
  if (const char* env = std::getenv("REGPROD_MAX_TERMS")) {
    try {
      session.cfg.max_terms = std::stoull(env);
    } catch (const std::exception&) {
      err << "regprod: invalid REGPROD_MAX_TERMS\n";
      return 2;
    }
  }

  CLI::App app{"Alternating zeta-regularized products and the modified gamma function"};
  app.require_subcommand(1);
  app.add_option("--format", session.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  std::string subcommand, target;

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "Evaluate a special function");
  eval->require_subcommand(1);
  std::string s_arg, z_arg, method_arg = "split", route_arg = "closed";
  int order_arg = 0, k_arg = 0;

  auto* zeta_e = eval->add_subcommand("zeta-e", "Alternating Hurwitz zeta");
  zeta_e->add_option("--s", s_arg)->required();
  zeta_e->add_option("--z", z_arg)->required();
  zeta_e->add_option("--method", method_arg)
      ->check(CLI::IsMember({"split", "direct"}));

  auto* gt = eval->add_subcommand("gamma-tilde", "Modified gamma function");
  gt->add_option("--z", z_arg)->required();
  gt->add_option("--route", route_arg)
      ->check(CLI::IsMember({"closed", "product", "series"}));

  auto* pt = eval->add_subcommand("psi-tilde", "Modified digamma and derivatives");
  pt->add_option("--z", z_arg)->required();
  pt->add_option("--order", order_arg)->check(CLI::Range(0, 12));

  auto* st = eval->add_subcommand("stieltjes", "Modified Stieltjes constant");
  st->add_option("--k", k_arg)->required()->check(CLI::Range(0, 8));
  st->add_option("--z", z_arg)->required();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Verify an identity");
  verify->require_subcommand(1);
  std::string zs_arg, x_arg, y_arg;
  long long cutoff_arg = -1, pairs_arg = 100000;
  int n_arg = 1, cases_arg = 100;

  auto* miz = verify->add_subcommand("mizuno", "Mizuno-type product identity");
  miz->add_option("--zs", zs_arg)->required();
  miz->add_option("--cutoff", cutoff_arg);
  miz->add_option("--tol", session.tolerance);

  auto* kw = verify->add_subcommand("kurokawa", "Kurokawa-Wakayama type identity");
  kw->add_option("--n", n_arg)->required()->check(CLI::PositiveNumber);
  kw->add_option("--x", x_arg)->required();
  kw->add_option("--y", y_arg)->required();
  kw->add_option("--tol", session.tolerance);

  auto* lerch = verify->add_subcommand("lerch", "Lerch-type formula");
  lerch->add_option("--x", x_arg)->required();
  lerch->add_option("--tol", session.tolerance);

  auto* lerch_cl = verify->add_subcommand("lerch-classical",
                                          "Classical Lerch formula");
  lerch_cl->add_option("--z", z_arg)->required();
  lerch_cl->add_option("--tol", session.tolerance);

  auto* wallis = verify->add_subcommand("wallis", "Wallis product");
  wallis->add_option("--pairs", pairs_arg)->check(CLI::PositiveNumber);
  wallis->add_option("--tol", session.tolerance);

  auto* suite = verify->add_subcommand("suite", "Randomized acceptance sweep");
  suite->add_option("--seed", session.seed);
  suite->add_option("--cases", cases_arg)->check(CLI::PositiveNumber);
  suite->add_option("--tol", session.tolerance);

  // ---- table ----
  auto* table = app.add_subcommand("table", "Emit a CSV table");
  table->require_subcommand(1);
  double from_arg = 0.5, to_arg = 5.0, step_arg = 0.5;
  auto* table_gt = table->add_subcommand("gamma-tilde", "Gamma~ over a real range");
  table_gt->add_option("--from", from_arg)->required();
  table_gt->add_option("--to", to_arg)->required();
  table_gt->add_option("--step", step_arg)->required()->check(CLI::PositiveNumber);

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "Acceleration benchmarks");
  bench->require_subcommand(1);
  std::string spec_arg, methods_arg = "paired,eta-expansion",
              sizes_arg = "1e3,1e4,1e5";
  auto* accel = bench->add_subcommand("accel", "Tail-summation method comparison");
  accel->add_option("--spec", spec_arg)->required();
  accel->add_option("--methods", methods_arg);
  accel->add_option("--sizes", sizes_arg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "regprod: " << e.what() << "\n" << app.help();
    return 2;
  }

  const auto parse_spec = [&](const std::string& text, long long cutoff) {
    ProductSpec spec;
    for (const auto& piece : split_list(text)) {
      spec.shifts.push_back(parse_complex(piece));
    }
    spec.cutoff_c = cutoff;
    spec.validate();
    return spec;
  };

  try {
    const EvalConfig& cfg = session.cfg;
    cfg.validate();

    if (zeta_e->parsed()) {
      subcommand = "eval"; target = "zeta-e";
      const Cplx s = parse_complex(s_arg), z = parse_complex(z_arg);
      session.timed("series", "zeta-e(s=" + cplx_name(s) + ",z=" + cplx_name(z) + ")",
                    [&](ResultRow& row) {
                      row.series = alt_hurwitz_zeta(
                          s, z,
                          method_arg == "direct" ? AltZetaMethod::direct
                                                 : AltZetaMethod::split,
                          cfg);
                    });
    } else if (gt->parsed()) {
      subcommand = "eval"; target = "gamma-tilde";
      const Cplx z = parse_complex(z_arg);
      const GammaTildeRoute route =
          route_arg == "product" ? GammaTildeRoute::weierstrass_product
          : route_arg == "series" ? GammaTildeRoute::log_series
                                  : GammaTildeRoute::closed_form;
      session.timed("series", "gamma-tilde(z=" + cplx_name(z) + ")",
                    [&](ResultRow& row) { row.series = gamma_tilde(z, route, cfg); });
    } else if (pt->parsed()) {
      subcommand = "eval"; target = "psi-tilde";
      const Cplx z = parse_complex(z_arg);
      session.timed("series",
                    "psi-tilde^(" + std::to_string(order_arg) + ")(z=" +
                        cplx_name(z) + ")",
                    [&](ResultRow& row) {
                      SeriesResult r;
                      r.value = order_arg == 0 ? psi_tilde(z)
                                               : psi_tilde_n(order_arg, z, cfg);
                      r.error_estimate = 1e-13 * std::max(1.0, std::abs(r.value));
                      r.terms_used = 1;
                      r.method = Method::direct;
                      r.converged = true;
                      row.series = r;
                    });
    } else if (st->parsed()) {
      subcommand = "eval"; target = "stieltjes";
      const Cplx z = parse_complex(z_arg);
      session.timed("series",
                    "stieltjes(k=" + std::to_string(k_arg) + ",z=" +
                        cplx_name(z) + ")",
                    [&](ResultRow& row) {
                      const ModStieltjesResult r = mod_stieltjes(k_arg, z, cfg);
                      SeriesResult sr;
                      sr.value = r.value;
                      sr.error_estimate = r.error_estimate;
                      sr.terms_used = static_cast<std::size_t>(cfg.contour_nodes);
                      sr.method = Method::contour;
                      sr.converged = true;
                      row.series = sr;
                    });
    } else if (miz->parsed()) {
      subcommand = "verify"; target = "mizuno";
      const ProductSpec spec = parse_spec(zs_arg, cutoff_arg);
      session.timed("verification", "mizuno", [&](ResultRow& row) {
        row.verification = verify_mizuno(spec, session.tolerance, cfg);
      });
    } else if (kw->parsed()) {
      subcommand = "verify"; target = "kurokawa";
      const Cplx x = parse_complex(x_arg), y = parse_complex(y_arg);
      session.timed("verification", "kurokawa(n=" + std::to_string(n_arg) + ")",
                    [&](ResultRow& row) {
                      row.verification =
                          kurokawa_wakayama(n_arg, x, y, session.tolerance, cfg);
                    });
    } else if (lerch->parsed()) {
      subcommand = "verify"; target = "lerch";
      const Cplx x = parse_complex(x_arg);
      session.timed("verification", "lerch(x=" + cplx_name(x) + ")",
                    [&](ResultRow& row) {
                      VerificationReport rep = verify_mizuno(
                          ProductSpec{{x}}, session.tolerance, cfg);
                      rep.identity = Identity::lerch;
                      row.verification = rep;
                    });
      if (x.imag() != 0.0) {
        // conjugate pair: the Lerch-type formula in Q(i)
        session.timed("verification", "lerch-qi(x=" + cplx_name(x) + ")",
                      [&](ResultRow& row) {
                        VerificationReport rep = verify_mizuno(
                            ProductSpec{{x, std::conj(x)}}, session.tolerance,
                            cfg);
                        rep.identity = Identity::lerch_qi;
                        row.verification = rep;
                      });
      }
    } else if (lerch_cl->parsed()) {
      subcommand = "verify"; target = "lerch-classical";
      const Cplx z = parse_complex(z_arg);
      session.timed("verification", "lerch-classical(z=" + cplx_name(z) + ")",
                    [&](ResultRow& row) {
                      row.verification =
                          classical_lerch_check(z, session.tolerance, cfg);
                    });
    } else if (wallis->parsed()) {
      subcommand = "verify"; target = "wallis";
      session.timed("verification", "wallis(pairs=" + std::to_string(pairs_arg) + ")",
                    [&](ResultRow& row) {
                      row.verification = verify_wallis(pairs_arg, session.tolerance);
                    });
    } else if (suite->parsed()) {
      subcommand = "verify"; target = "suite";
      const auto reports =
          verify_suite(session.seed, cases_arg, session.tolerance, cfg);
      for (const auto& rep : reports) {
        ResultRow row;
        row.kind = "verification";
        row.name = "suite/case-" + rep.metadata.at("case");
        row.verification = rep;
        auto it = row.verification->metadata.find("runtime_ms");
        if (it != row.verification->metadata.end()) {
          row.runtime_ms = std::stod(it->second);
          row.verification->metadata.erase(it);
        }
        session.rows.push_back(std::move(row));
      }
    } else if (table_gt->parsed()) {
      subcommand = "table"; target = "gamma-tilde";
      session.raw_csv = true;
      auto& os = session.raw_output;
      os << "z,gamma_tilde_re,gamma_tilde_im,psi_tilde_re,psi_tilde_im\n";
      for (double z = from_arg; z <= to_arg + 1e-12; z += step_arg) {
        const SeriesResult g = gamma_tilde(Cplx(z, 0.0), cfg);
        const Cplx p = psi_tilde(Cplx(z, 0.0));
        os << fmt17(z) << "," << fmt17(g.value.real()) << ","
           << fmt17(g.value.imag()) << "," << fmt17(p.real()) << ","
           << fmt17(p.imag()) << "\n";
      }
    } else if (accel->parsed()) {
      subcommand = "bench"; target = "accel";
      ProductSpec spec = parse_spec(spec_arg, -1);
      const SeriesResult reference = lambda_star_deriv_zero(spec, cfg);
      for (const auto& method : split_list(methods_arg)) {
        TailMethod tm;
        if (method == "paired") {
          tm = TailMethod::paired_direct;
        } else if (method == "eta-expansion") {
          tm = TailMethod::eta_expansion;
        } else {
          throw std::invalid_argument("unknown method: '" + method + "'");
        }
        for (const auto& size : split_list(sizes_arg)) {
          EvalConfig budget = cfg;
          budget.max_terms = static_cast<std::size_t>(std::stod(size));
          session.timed(
              "series", "accel/" + method + "/" + size, [&](ResultRow& row) {
                row.series = lambda_star_deriv_zero(spec, budget, tm);
                row.extra["deviation_from_reference"] = fmt17(
                    std::abs(row.series->value - reference.value));
              });
        }
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "regprod: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "regprod: " << e.what() << "\n";
    return 2;
  }

  if (session.raw_csv) {
    out << session.raw_output.str();
    return 0;
  }

  if (session.format == "json") {
    render_json(session, args, subcommand, target, out);
  } else if (session.format == "csv") {
    render_csv(session, out);
  } else {
    render_text(session, out);
  }

  bool any_fail = false, any_unconverged = false;
  for (const auto& row : session.rows) {
    if (row.verification && !row.verification->pass) any_fail = true;
    if (row.series && !row.series->converged) any_unconverged = true;
  }
  if (any_fail) return 1;
  if (any_unconverged) return 3;
  return 0;
}

}  // namespace regprod::cli
