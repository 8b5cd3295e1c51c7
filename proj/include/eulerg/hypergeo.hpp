#pragma once

#include <vector>

#include "eulerg/error.hpp"
#include "eulerg/log_series.hpp"

namespace eulerg {

/// Upper (alphas) and lower (betas) parameters of rFs; r <= s is required.
struct PhqParams {
  std::vector<Cplx> alphas;
  std::vector<Cplx> betas;
};

struct SeriesEvalReport {
  Cplx value{};
  int terms_used = 0;
  double est_error = 0.0;
};

inline constexpr int kDefaultMaxTerms = 10000;
inline constexpr int kDefaultTrunc = 40;

/// rFs(alphas; betas | zeta) by adaptive summation. Throws BetaAtPole when a
/// lower parameter is a nonpositive integer, NoConvergence when `max_terms`
/// terms do not reach `tol`.
SeriesEvalReport phq(const PhqParams& params, Cplx zeta, double tol, int max_terms = kDefaultMaxTerms);

/// The regularized series rFs / prod Gamma(beta_m), entire in every beta.
SeriesEvalReport phq_regularized(const PhqParams& params, Cplx zeta, double tol,
                                 int max_terms = kDefaultMaxTerms);

/// True when no two betas differ by an integer and none is a pole.
bool phq_is_generic(const PhqParams& params);

/// Symbolic series  coeff_scale * zeta^shift * rFs(alphas; betas | sign*zeta)
/// with offsets 0..trunc. Betas must avoid the nonpositive integers.
LogPowerSeries phq_log_series(const PhqParams& params, Cplx shift, int sign, int trunc,
                              Cplx coeff_scale = 1.0);

/// The s+1 solutions u_0, u_1..u_s of the rFs differential equation in the
/// generic case; throws NonGenericParameters otherwise.
std::vector<LogPowerSeries> phq_fundamental_system(const PhqParams& params, int trunc = kDefaultTrunc);

/// Largest coefficient of [theta prod(theta+beta-1) - zeta prod(theta+alpha)] u
/// below the truncation order of u.
double hypergeo_ode_residual(const PhqParams& params, const LogPowerSeries& u);

}  // namespace eulerg
