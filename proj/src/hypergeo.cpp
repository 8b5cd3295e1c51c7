#include "eulerg/hypergeo.hpp"

#include <algorithm>
#include <cmath>

#include "eulerg/numeric.hpp"
#include "eulerg/scalar_gamma.hpp"

namespace eulerg {
namespace {

void validate(const PhqParams& params, Cplx zeta, double tol) {
  if (params.alphas.size() > params.betas.size())
    throw Error(ErrorKind::InvalidParams, "rFs requires r <= s");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidParams, "tolerance must be positive");
  require_finite(zeta, "zeta");
  for (const auto& a : params.alphas) require_finite(a, "alpha");
  for (const auto& b : params.betas) require_finite(b, "beta");
}

// Index N of the first alpha equal to -N (the series is then a polynomial of
// degree N), or -1.
int terminating_degree(const PhqParams& params) {
  int degree = -1;
  for (const auto& a : params.alphas) {
    const int n = nonpositive_integer_index(a);
    if (n >= 0 && (degree < 0 || n < degree)) degree = n;
  }
  return degree;
}

SeriesEvalReport sum_series(const PhqParams& params, Cplx zeta, double tol, int max_terms, bool regularized) {
  validate(params, zeta, tol);
  if (!regularized) {
    for (const auto& b : params.betas)
      if (nonpositive_integer_index(b) >= 0)
        throw Error(ErrorKind::BetaAtPole, "lower parameter is a nonpositive integer");
  }

  // In the regularized series each lower factor contributes 1/Gamma(beta+k).
  // Up to the last pole crossing these are tracked one by one (they may be
  // exactly zero); afterwards the plain term ratio takes over.
  int last_crossing = -1;
  std::vector<Cplx> recip(params.betas.size(), 1.0);
  if (regularized) {
    for (std::size_t m = 0; m < params.betas.size(); ++m) {
      recip[m] = recip_gamma(params.betas[m]);
      last_crossing = std::max(last_crossing, nonpositive_integer_index(params.betas[m]));
    }
  }
  auto recip_product = [&]() {
    Cplx p = 1.0;
    for (const auto& g : recip) p *= g;
    return p;
  };

  const int degree = terminating_degree(params);
  Cplx numer = 1.0;  // prod (alpha)_k zeta^k / k!
  Cplx term = regularized ? recip_product() : Cplx(1.0);

  SeriesEvalReport report;
  if (zeta == Cplx{} || degree == 0) {
    report.value = term;
    report.terms_used = 1;
    return report;
  }

  Cplx sum = 0.0;
  double max_partial = 0.0;
  int small_run = 0;
  for (int k = 0; k < max_terms; ++k) {
    sum += term;
    max_partial = std::max(max_partial, std::abs(sum));
    small_run = (std::abs(term) < tol * max_partial) ? small_run + 1 : 0;

    // Next term.
    Cplx up = zeta / static_cast<double>(k + 1);
    for (const auto& a : params.alphas) up *= a + static_cast<double>(k);
    Cplx next;
    if (regularized && k <= last_crossing) {
      numer *= up;
      for (std::size_t m = 0; m < recip.size(); ++m) {
        const Cplx arg = params.betas[m] + static_cast<double>(k + 1);
        if (nonpositive_integer_index(arg) >= 0)
          recip[m] = 0.0;
        else if (recip[m] == Cplx{})
          recip[m] = recip_gamma(arg);
        else
          recip[m] /= params.betas[m] + static_cast<double>(k);
      }
      next = numer * recip_product();
    } else {
      Cplx down = 1.0;
      for (const auto& b : params.betas) down *= b + static_cast<double>(k);
      next = term * up / down;
    }

    const bool terminated = degree >= 0 && k == degree;
    if (terminated || small_run >= 3) {
      report.value = sum;
      report.terms_used = k + 1;
      if (!terminated) {
        const double rho = std::abs(term) > 0.0 ? std::abs(next) / std::abs(term) : 0.0;
        report.est_error = std::abs(next) / (1.0 - std::min(rho, 0.5));
      }
      require_finite(report.value, "series value");
      return report;
    }
    term = next;
  }
  throw Error(ErrorKind::NoConvergence, "series did not reach tolerance within " +
                                            std::to_string(max_terms) + " terms");
}

}  // namespace

SeriesEvalReport phq(const PhqParams& params, Cplx zeta, double tol, int max_terms) {
  return sum_series(params, zeta, tol, max_terms, false);
}

SeriesEvalReport phq_regularized(const PhqParams& params, Cplx zeta, double tol, int max_terms) {
  return sum_series(params, zeta, tol, max_terms, true);
}

bool phq_is_generic(const PhqParams& params) {
  // The exponent 0 solution corresponds to an implicit lower parameter 1, so
  // every beta is compared against 1 as well as against the others.
  const auto& b = params.betas;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (is_near_integer(b[i])) return false;
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (is_near_integer(b[i] - b[j])) return false;
  }
  return true;
}

LogPowerSeries phq_log_series(const PhqParams& params, Cplx shift, int sign, int trunc, Cplx coeff_scale) {
  for (const auto& b : params.betas)
    if (nonpositive_integer_index(b) >= 0)
      throw Error(ErrorKind::BetaAtPole, "lower parameter is a nonpositive integer");
  LogPowerSeries u;
  u.trunc_order = trunc;
  Cplx c = coeff_scale;
  for (int n = 0; n <= trunc; ++n) {
    u.terms.push_back({shift + static_cast<double>(n), 0, c});
    Cplx ratio = static_cast<double>(sign) / static_cast<double>(n + 1);
    for (const auto& a : params.alphas) ratio *= a + static_cast<double>(n);
    for (const auto& b : params.betas) ratio /= b + static_cast<double>(n);
    c *= ratio;
  }
  return canonicalize(std::move(u));
}

std::vector<LogPowerSeries> phq_fundamental_system(const PhqParams& params, int trunc) {
  if (params.alphas.size() > params.betas.size())
    throw Error(ErrorKind::InvalidParams, "rFs requires r <= s");
  if (!phq_is_generic(params))
    throw Error(ErrorKind::NonGenericParameters,
                "lower parameters differ by integers; use the log-power construction");

  std::vector<LogPowerSeries> out;
  out.push_back(phq_log_series(params, 0.0, 1, trunc));
  const auto& beta = params.betas;
  for (std::size_t m = 0; m < beta.size(); ++m) {
    PhqParams shifted;
    for (const auto& a : params.alphas) shifted.alphas.push_back(1.0 + a - beta[m]);
    // Lower row: 1 + beta_m' - beta_m over m' = 0..s with beta_0 = 1, the
    // entry m' = m itself left out.
    shifted.betas.push_back(2.0 - beta[m]);
    for (std::size_t mm = 0; mm < beta.size(); ++mm)
      if (mm != m) shifted.betas.push_back(1.0 + beta[mm] - beta[m]);
    out.push_back(phq_log_series(shifted, 1.0 - beta[m], 1, trunc));
  }
  return out;
}

double hypergeo_ode_residual(const PhqParams& params, const LogPowerSeries& u) {
  LogPowerSeries left = u;
  for (const auto& b : params.betas) left = theta_plus(left, b - 1.0);
  left = theta_plus(left, 0.0);
  LogPowerSeries right = u;
  for (const auto& a : params.alphas) right = theta_plus(right, a);
  right = series_scale(times_zeta(right), -1.0);
  return residual_norm(u, series_add(left, right));
}

}  // namespace eulerg
