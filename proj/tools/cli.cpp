#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "eulerg/cplx_literal.hpp"
#include "eulerg/euler.hpp"
#include "eulerg/expr.hpp"
#include "eulerg/grid.hpp"
#include "eulerg/hypergeo.hpp"
#include "eulerg/meijer.hpp"
#include "eulerg/nonhomo.hpp"
#include "eulerg/verify.hpp"

namespace eulerg::cli {
namespace {

// ------------------------------------------------------------ output --

std::string json_escape(const std::string& s) {
  std::string r;
  for (const char c : s) {
    switch (c) {
      case '"': r += "\\\""; break;
      case '\\': r += "\\\\"; break;
      case '\n': r += "\\n"; break;
      case '\t': r += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          r += buf;
        } else {
          r += c;
        }
    }
  }
  return r;
}

// JSON has no inf/nan; non-finite numbers are written as strings.
std::string json_number(double v) {
  if (std::isfinite(v)) return format_double(v);
  return "\"" + format_double(v) + "\"";
}

std::string json_cplx(Cplx z) { return "{\"re\":" + json_number(z.real()) + ",\"im\":" + json_number(z.imag()) + "}"; }

std::string json_string(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string json_cplx_list(const std::vector<Cplx>& v) {
  std::string r = "[";
  for (std::size_t i = 0; i < v.size(); ++i) r += (i ? "," : "") + json_string(format_cplx(v[i]));
  return r + "]";
}

// Input echo: an ordered list of key / already-encoded JSON value pairs.
using Echo = std::vector<std::pair<std::string, std::string>>;

std::string json_object(const Echo& fields) {
  std::string r = "{";
  for (std::size_t i = 0; i < fields.size(); ++i)
    r += (i ? "," : "") + json_string(fields[i].first) + ":" + fields[i].second;
  return r + "}";
}

struct Record {
  Echo input;
  SeriesEvalReport report;
  double elapsed_ms = 0.0;
};

struct Emitter {
  std::string command;
  std::string format = "json";
  bool timing = false;

  void header(std::ostream& out) const {
    if (format == "csv") out << "re,im,terms_used,est_error" << (timing ? ",elapsed_ms" : "") << '\n';
  }

  void emit(std::ostream& out, const Record& r) const {
    if (format == "csv") {
      out << format_double(r.report.value.real()) << ',' << format_double(r.report.value.imag()) << ','
          << r.report.terms_used << ',' << format_double(r.report.est_error);
      if (timing) out << ',' << format_double(r.elapsed_ms);
      out << '\n';
      return;
    }
    out << "{\"command\":" << json_string(command) << ",\"input\":" << json_object(r.input)
        << ",\"value\":" << json_cplx(r.report.value) << ",\"terms_used\":" << r.report.terms_used
        << ",\"est_error\":" << json_number(r.report.est_error);
    if (timing) out << ",\"elapsed_ms\":" << json_number(r.elapsed_ms);
    out << "}\n";
  }
};

template <class F>
std::pair<SeriesEvalReport, double> timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  SeriesEvalReport r = f();
  const auto t1 = std::chrono::steady_clock::now();
  return {r, std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

// ----------------------------------------------------------- helpers --

int max_terms_from_env() {
  const char* env = std::getenv("EULERG_MAX_TERMS");
  if (env == nullptr || *env == '\0') return kDefaultMaxTerms;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 100000000)
    throw Error(ErrorKind::Parse, "EULERG_MAX_TERMS must be a positive integer, got '" + std::string(env) + "'");
  return static_cast<int>(v);
}

std::vector<Cplx> points_from(const std::string& single, const std::string& grid, const char* name) {
  if (!single.empty() && !grid.empty())
    throw Error(ErrorKind::Parse, std::string("--") + name + " and --" + name + "-grid are exclusive");
  if (!grid.empty()) return linspace(parse_grid(grid));
  if (!single.empty()) return {parse_cplx(single)};
  throw Error(ErrorKind::Parse, std::string("one of --") + name + " or --" + name + "-grid is required");
}


struct Common {
  std::string format = "json";
  bool timing = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_flag("--timing", c.timing, "Add elapsed_ms to every record");
}

// ---------------------------------------------------------- commands --

struct PhqArgs {
  std::string a, b, zeta, zeta_grid;
  double tol = 1e-15;
  bool regularized = false;
  Common common;
};

int cmd_phq(const PhqArgs& args, std::ostream& out) {
  PhqParams p;
  p.alphas = parse_cplx_list(args.a);
  p.betas = parse_cplx_list(args.b);
  const auto points = points_from(args.zeta, args.zeta_grid, "zeta");
  const int max_terms = max_terms_from_env();

  const auto results = evaluate_grid<std::pair<SeriesEvalReport, double>>(points, [&](Cplx zeta) {
    return timed([&] {
      return args.regularized ? phq_regularized(p, zeta, args.tol, max_terms) : phq(p, zeta, args.tol, max_terms);
    });
  });
  Emitter em{"phq", args.common.format, args.common.timing};
  em.header(out);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Echo in{{"a", json_cplx_list(p.alphas)},
            {"b", json_cplx_list(p.betas)},
            {"zeta", json_string(format_cplx(points[i]))},
            {"regularized", args.regularized ? "true" : "false"}};
    em.emit(out, {in, results[i].first, results[i].second});
  }
  return kOk;
}

struct MeijerArgs {
  int m = 0, n = 0;
  std::string a, b, zeta, zeta_grid;
  std::string method = "auto";
  double tol = 1e-15;
  Common common;
};

int cmd_meijer(const MeijerArgs& args, std::ostream& out) {
  GParams g;
  g.m = args.m;
  g.n = args.n;
  g.a = parse_cplx_list(args.a);
  g.b = parse_cplx_list(args.b);
  const auto points = points_from(args.zeta, args.zeta_grid, "zeta");
  const int max_terms = max_terms_from_env();
  validate(g);

  std::string method = args.method;
  if (method == "auto") method = has_distinct_numerator_classes(g) ? "series" : "residue";
  const auto results = evaluate_grid<std::pair<SeriesEvalReport, double>>(points, [&](Cplx zeta) {
    return timed([&] {
      return method == "series" ? meijer_g_generic(g, zeta, args.tol, max_terms)
                                : meijer_g_residue_sum(g, zeta, args.tol, max_terms);
    });
  });
  Emitter em{"meijer", args.common.format, args.common.timing};
  em.header(out);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Echo in{{"m", std::to_string(g.m)},
            {"n", std::to_string(g.n)},
            {"a", json_cplx_list(g.a)},
            {"b", json_cplx_list(g.b)},
            {"zeta", json_string(format_cplx(points[i]))},
            {"method", json_string(method)}};
    em.emit(out, {in, results[i].first, results[i].second});
  }
  return kOk;
}

struct EulerArgs {
  std::string lambda, mu, z, z_grid;
  int trunc = kDefaultTrunc;
  std::string emit = "values";
  Common common;
};

void emit_series(std::ostream& out, const std::string& format, const EulerProblem& pr,
                 const std::vector<EulerSolution>& sys) {
  if (format == "csv") {
    out << "solution,exponent_re,exponent_im,log_power,coeff_re,coeff_im\n";
    for (std::size_t j = 0; j < sys.size(); ++j)
      for (const auto& t : sys[j].series.terms)
        out << j << ',' << format_double(t.exponent.real()) << ',' << format_double(t.exponent.imag()) << ','
            << t.log_power << ',' << format_double(t.coeff.real()) << ',' << format_double(t.coeff.imag()) << '\n';
    return;
  }
  out << "{\"command\":\"euler\",\"input\":"
      << json_object({{"lambda", json_cplx_list(pr.lambdas)}, {"mu", json_string(format_cplx(pr.mu))}})
      << ",\"variable\":\"zeta = mu (z/N)^N\",\"solutions\":[";
  for (std::size_t j = 0; j < sys.size(); ++j) {
    const auto& s = sys[j].series;
    out << (j ? "," : "") << "{\"index\":" << j << ",\"arg_sign\":" << s.arg_sign
        << ",\"trunc_order\":" << s.trunc_order << ",\"terms\":[";
    for (std::size_t k = 0; k < s.terms.size(); ++k) {
      const auto& t = s.terms[k];
      out << (k ? "," : "") << "{\"exponent\":" << json_cplx(t.exponent) << ",\"log_power\":" << t.log_power
          << ",\"coeff\":" << json_cplx(t.coeff) << "}";
    }
    out << "]}";
  }
  out << "]}\n";
}

int cmd_euler(const EulerArgs& args, std::ostream& out) {
  EulerProblem pr;
  pr.lambdas = parse_cplx_list(args.lambda);
  pr.order = static_cast<int>(pr.lambdas.size());
  pr.mu = parse_cplx(args.mu);
  const bool want_values = args.emit != "series";
  std::vector<Cplx> points;
  if (want_values || !args.z.empty() || !args.z_grid.empty()) points = points_from(args.z, args.z_grid, "z");
  if (args.trunc < 1 || args.trunc > 400) throw Error(ErrorKind::InvalidParams, "--trunc must lie in [1, 400]");
  validate(pr);
  if (pr.mu == Cplx{}) throw Error(ErrorKind::DegenerateSpectralParameter, "mu = 0 collapses the substitution");

  const auto sys = euler_fundamental_system(pr, args.trunc);
  if (!want_values || args.emit == "both") emit_series(out, args.common.format, pr, sys);
  if (!want_values) return kOk;

  using Row = std::vector<std::pair<SeriesEvalReport, double>>;
  const auto rows = evaluate_grid<Row>(points, [&](Cplx z) {
    Row row;
    for (const auto& s : sys)
      row.push_back(timed([&] {
        SeriesEvalReport r;
        r.value = euler_eval(s, z);
        r.terms_used = static_cast<int>(s.series.terms.size());
        r.est_error = tail_magnitude(s.series, euler_zeta(pr, z));
        return r;
      }));
    return row;
  });
  Emitter em{"euler", args.common.format, args.common.timing};
  em.header(out);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j) {
      Echo in{{"lambda", json_cplx_list(pr.lambdas)},
              {"mu", json_string(format_cplx(pr.mu))},
              {"z", json_string(format_cplx(points[i]))},
              {"solution", std::to_string(j)}};
      em.emit(out, {in, rows[i][j].first, rows[i][j].second});
    }
  return kOk;
}

struct SolveArgs {
  std::string lambda, rhs, z, z_grid, homog;
  double quad_tol = 1e-9;
  int max_subdivisions = 200;
  Common common;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const auto lambdas = parse_cplx_list(args.lambda);
  if (lambdas.empty()) throw Error(ErrorKind::InvalidParams, "--lambda needs at least one value");
  const RhsFunction f = parse_expression(args.rhs);
  const auto coeffs = parse_cplx_list(args.homog);
  const auto points = points_from(args.z, args.z_grid, "z");
  QuadratureConfig quad;
  quad.rel_tol = args.quad_tol;
  quad.max_subdivisions = args.max_subdivisions;

  const auto results = evaluate_grid<std::pair<SeriesEvalReport, double>>(points, [&](Cplx z) {
    return timed([&] {
      const ParticularReport p = general_solution(lambdas, f, z, coeffs, quad);
      return SeriesEvalReport{p.value, p.subdivisions, p.est_error};
    });
  });
  Emitter em{"solve", args.common.format, args.common.timing};
  em.header(out);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Echo in{{"lambda", json_cplx_list(lambdas)},
            {"rhs", json_string(args.rhs)},
            {"homog_coeffs", json_cplx_list(coeffs)},
            {"z", json_string(format_cplx(points[i]))}};
    em.emit(out, {in, results[i].first, results[i].second});
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (!is_verify_suite(args.suite)) throw Error(ErrorKind::Parse, "unknown suite '" + args.suite + "'");
  const VerifyOutcome v = run_verify(args.suite, args.seed);
  print_verify(v, out);
  return verify_exit_code(v);
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kUsage;
    case ErrorKind::InvalidParams:
    case ErrorKind::NonGenericParameters:
    case ErrorKind::BadPrefix: return kInvalidParams;
    default: return kNumerical;
  }
}

int verify_exit_code(const VerifyOutcome& outcome) { return outcome.all_pass() ? kOk : kVerifyFailed; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Meijer G-functions, hypergeometric series and generalized Euler equations", "eulerg"};
  app.require_subcommand(1);

  PhqArgs phq_args;
  auto* phq_cmd = app.add_subcommand("phq", "Evaluate the hypergeometric series rFs");
  phq_cmd->add_option("--a", phq_args.a, "Upper parameters, comma separated (may be empty)");
  phq_cmd->add_option("--b", phq_args.b, "Lower parameters, comma separated");
  phq_cmd->add_option("--zeta", phq_args.zeta, "Argument (RE, RE+IMi, RE-IMi or IMi)");
  phq_cmd->add_option("--zeta-grid", phq_args.zeta_grid, "Straight-line sweep start:stop:count");
  phq_cmd->add_option("--tol", phq_args.tol, "Relative stopping tolerance")->check(CLI::PositiveNumber);
  phq_cmd->add_flag("--regularized", phq_args.regularized, "Divide by the product of Gamma(b)");
  add_common(phq_cmd, phq_args.common);

  MeijerArgs mj;
  auto* meijer_cmd = app.add_subcommand("meijer", "Evaluate the Meijer G-function G^{m,n}_{p,q}");
  meijer_cmd->add_option("--m", mj.m, "Number of numerator b parameters")->required();
  meijer_cmd->add_option("--n", mj.n, "Number of numerator a parameters")->required();
  meijer_cmd->add_option("--a", mj.a, "a parameters, comma separated");
  meijer_cmd->add_option("--b", mj.b, "b parameters, comma separated");
  meijer_cmd->add_option("--zeta", mj.zeta, "Argument");
  meijer_cmd->add_option("--zeta-grid", mj.zeta_grid, "Straight-line sweep start:stop:count");
  meijer_cmd->add_option("--method", mj.method, "residue, series or auto")
      ->check(CLI::IsMember({"residue", "series", "auto"}));
  meijer_cmd->add_option("--tol", mj.tol, "Relative stopping tolerance")->check(CLI::PositiveNumber);
  add_common(meijer_cmd, mj.common);

  EulerArgs eu;
  auto* euler_cmd = app.add_subcommand("euler", "Fundamental system of z^-N prod(z d/dz - lambda_j) y = mu y");
  euler_cmd->add_option("--lambda", eu.lambda, "lambda_1..lambda_N, comma separated")->required();
  euler_cmd->add_option("--mu", eu.mu, "Spectral parameter")->required();
  euler_cmd->add_option("--z", eu.z, "Evaluation point");
  euler_cmd->add_option("--z-grid", eu.z_grid, "Straight-line sweep start:stop:count");
  euler_cmd->add_option("--trunc", eu.trunc, "Highest series offset kept");
  euler_cmd->add_option("--emit", eu.emit, "series, values or both")
      ->check(CLI::IsMember({"series", "values", "both"}));
  add_common(euler_cmd, eu.common);

  SolveArgs so;
  auto* solve_cmd = app.add_subcommand("solve", "General solution of the nonhomogeneous Euler equation");
  solve_cmd->add_option("--lambda", so.lambda, "lambda_1..lambda_N, comma separated")->required();
  solve_cmd->add_option("--rhs", so.rhs, "Right-hand side f(z), e.g. \"z^3 + exp(z)\"")->required();
  solve_cmd->add_option("--z", so.z, "Evaluation point");
  solve_cmd->add_option("--z-grid", so.z_grid, "Straight-line sweep start:stop:count");
  solve_cmd->add_option("--homog-coeffs", so.homog, "Coefficients of z^lambda (ln z)^k, basis order");
  solve_cmd->add_option("--quad-tol", so.quad_tol, "Relative quadrature tolerance")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-subdivisions", so.max_subdivisions, "Bisections allowed per level")
      ->check(CLI::PositiveNumber);
  add_common(solve_cmd, so.common);

  VerifyArgs ve;
  auto* verify_cmd = app.add_subcommand("verify", "Run the seeded property suites");
  verify_cmd->add_option("--suite", ve.suite, "gamma, jets, hypergeo, meijer, euler, nonhomo or all");
  verify_cmd->add_option("--seed", ve.seed, "Seed of the random instances");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (phq_cmd->parsed()) return cmd_phq(phq_args, out);
    if (meijer_cmd->parsed()) return cmd_meijer(mj, out);
    if (euler_cmd->parsed()) return cmd_euler(eu, out);
    if (solve_cmd->parsed()) return cmd_solve(so, out);
    if (verify_cmd->parsed()) return cmd_verify(ve, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace eulerg::cli
