#pragma once

#include <vector>

#include "eulerg/error.hpp"

namespace eulerg {

struct LogTerm {
  Cplx exponent{};
  int log_power = 0;
  Cplx coeff{};
};

/// A finite sum  sum coeff * x^exponent * (ln x)^log_power  in the variable
/// x = arg_sign * zeta, with x^e and ln x taken on the principal branch.
///
/// Keeping the sign separate lets G-functions evaluated at -zeta be stored
/// exactly: multiplication by zeta becomes arg_sign * x, while theta = zeta
/// d/dzeta coincides with x d/dx. Exponents are grouped into classes that
/// differ by integers; trunc_order bounds the integer offset above the
/// lowest exponent of each class.
struct LogPowerSeries {
  std::vector<LogTerm> terms;
  int trunc_order = 0;
  int arg_sign = 1;
};

struct LeadingTerm {
  Cplx exponent{};
  int log_power = 0;
  Cplx coeff{};
};

/// Sorts terms and merges those with equal exponent and log power. Terms
/// whose coefficient is exactly zero are dropped.
LogPowerSeries canonicalize(LogPowerSeries u);

LogPowerSeries series_add(const LogPowerSeries& u, const LogPowerSeries& v);
LogPowerSeries series_scale(const LogPowerSeries& u, Cplx s);
/// (theta + shift) u with theta = zeta d/dzeta.
LogPowerSeries theta_plus(const LogPowerSeries& u, Cplx shift);
/// zeta * u.
LogPowerSeries times_zeta(const LogPowerSeries& u);

/// Largest coefficient magnitude (0 for the empty series).
double max_coeff(const LogPowerSeries& u);
int max_log_power(const LogPowerSeries& u);

/// Largest coefficient of `residual` whose exponent sits below offset
/// `source.trunc_order` of its class in `source`. Orders at and above the
/// truncation are polluted by the cut-off and are ignored.
double residual_norm(const LogPowerSeries& source, const LogPowerSeries& residual);

/// Value of the series at zeta.
Cplx evaluate(const LogPowerSeries& u, Cplx zeta);

/// Magnitude of the highest-offset contribution at zeta (a truncation
/// indicator for evaluation reports).
double tail_magnitude(const LogPowerSeries& u, Cplx zeta);

/// The dominant term as zeta -> 0: minimal Re(exponent), then maximal log
/// power. Throws EmptySeries for a series without nonzero terms.
LeadingTerm leading_asymptotics(const LogPowerSeries& u);

/// det[theta^i y_j(zeta0)], and a scale-free version of it: the determinant
/// after every column is scaled to unit norm, divided by the product of the
/// row norms (1 for orthogonal rows, 0 for dependent solutions).
struct Wronskian {
  Cplx det{};
  double normalized = 0.0;
};
Wronskian generalized_wronskian(const std::vector<LogPowerSeries>& ys, Cplx zeta0);

/// Determinant of a dense complex matrix by partial-pivot elimination.
Cplx determinant(std::vector<std::vector<Cplx>> a);

}  // namespace eulerg
