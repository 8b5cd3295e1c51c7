#include "eulerg/meijer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "eulerg/jets.hpp"
#include "eulerg/numeric.hpp"
#include "eulerg/scalar_gamma.hpp"

namespace eulerg {
namespace {

constexpr double kPi = std::numbers::pi;
const Cplx kI{0.0, 1.0};

// Gamma factors of a Mellin-Barnes integrand, grouped by how omega enters:
//   prod Gamma(c - w) * prod Gamma(c + w) / prod Gamma(c + w) / prod Gamma(c - w)
struct Integrand {
  std::vector<Cplx> gamma_minus;
  std::vector<Cplx> gamma_plus;
  std::vector<Cplx> recip_plus;
  std::vector<Cplx> recip_minus;
};

Integrand integrand_of(const GParams& g) {
  Integrand f;
  for (int j = 0; j < g.q(); ++j) {
    const auto& bj = g.b[static_cast<std::size_t>(j)];
    if (j < g.m)
      f.gamma_minus.push_back(bj);
    else
      f.recip_plus.push_back(1.0 - bj);
  }
  for (int k = 0; k < g.p(); ++k) {
    const auto& ak = g.a[static_cast<std::size_t>(k)];
    if (k < g.n)
      f.gamma_plus.push_back(1.0 - ak);
    else
      f.recip_minus.push_back(ak);
  }
  return f;
}

// Laurent jet of the integrand without the zeta^omega factor.
LaurentJet integrand_jet(const Integrand& f, Cplx center, int order) {
  LaurentJet acc = unit_jet(1.0, center, order);
  for (const auto& c : f.gamma_minus) acc = jet_mul(acc, gamma_affine_jet(c, -1, center, order));
  for (const auto& c : f.gamma_plus) acc = jet_mul(acc, gamma_affine_jet(c, 1, center, order));
  for (const auto& c : f.recip_plus) acc = jet_mul(acc, recip_gamma_affine_jet(c, 1, center, order));
  for (const auto& c : f.recip_minus) acc = jet_mul(acc, recip_gamma_affine_jet(c, -1, center, order));
  return acc;
}

int jet_order_for(int multiplicity) {
  const int k = default_jet_order(multiplicity);
  if (k > kMaxJetOrder)
    throw Error(ErrorKind::InvalidParams,
                "pole multiplicity " + std::to_string(multiplicity) + " exceeds the supported maximum");
  return k;
}

// One ladder of poles omega = base + n generated by a congruence class of
// numerator parameters, with the bookkeeping needed to stop summing.
struct Ladder {
  Cplx base;
  std::vector<long> member_offsets;
  long last_special_offset = 0;  // beyond it pole orders are constant
  int asymptotic_order = 0;      // pole order for large n
};

std::vector<Ladder> build_ladders(const GParams& g) {
  std::vector<Cplx> numer(g.b.begin(), g.b.begin() + g.m);
  const auto parts = congruence_partition(numer);
  std::vector<Ladder> ladders;
  for (const auto& cls : parts.classes) {
    Ladder l;
    l.base = cls.back().value;
    for (const auto& mem : cls) {
      const long d = nearest_integer(mem.value - l.base);
      l.member_offsets.push_back(d);
      l.last_special_offset = std::max(l.last_special_offset, d);
    }
    int zero_ladders = 0;
    for (int j = g.m; j < g.q(); ++j) {
      const Cplx d = g.b[static_cast<std::size_t>(j)] - 1.0 - l.base;
      if (is_near_integer(d)) l.last_special_offset = std::max(l.last_special_offset, nearest_integer(d));
    }
    for (int k = g.n; k < g.p(); ++k) {
      const Cplx d = g.a[static_cast<std::size_t>(k)] - l.base;
      if (is_near_integer(d)) {
        l.last_special_offset = std::max(l.last_special_offset, nearest_integer(d));
        ++zero_ladders;
      }
    }
    l.asymptotic_order = static_cast<int>(cls.size()) - zero_ladders;
    ladders.push_back(std::move(l));
  }
  return ladders;
}

int multiplicity_at(const Ladder& l, long n) {
  int count = 0;
  for (long d : l.member_offsets)
    if (d <= n) ++count;
  return count;
}

// -Res_{omega0} [R(omega) exp(omega L)] for the Laurent jet R at omega0.
Cplx negated_residue(const LaurentJet& r, Cplx log_zeta) {
  Cplx sum = 0.0;
  Cplx power = std::exp(r.center * log_zeta);
  for (int k = 0; k < r.pole_order; ++k) {
    sum += r.coeff(-1 - k) * power;
    power *= log_zeta / static_cast<double>(k + 1);
  }
  return -sum;
}

bool pairwise_noninteger(const std::vector<Cplx>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (is_near_integer(v[i] - v[j])) return false;
  return true;
}

}  // namespace

void validate(const GParams& g) {
  if (g.q() < 1) throw Error(ErrorKind::InvalidParams, "q must be at least 1");
  if (g.p() >= g.q()) throw Error(ErrorKind::InvalidParams, "p must be smaller than q");
  if (g.m < 0 || g.m > g.q()) throw Error(ErrorKind::InvalidParams, "m must lie in [0, q]");
  if (g.n < 0 || g.n > g.p()) throw Error(ErrorKind::InvalidParams, "n must lie in [0, p]");
  for (const auto& v : g.a) require_finite(v, "parameter a");
  for (const auto& v : g.b) require_finite(v, "parameter b");
  for (int k = 0; k < g.n; ++k)
    for (int j = 0; j < g.m; ++j) {
      const Cplx d = g.a[static_cast<std::size_t>(k)] - g.b[static_cast<std::size_t>(j)];
      if (is_near_integer(d) && nearest_integer(d) >= 1)
        throw Error(ErrorKind::InvalidParams, "a_k - b_j is a positive integer (poles collide)");
    }
}

CongruenceClasses congruence_partition(const std::vector<Cplx>& b) {
  CongruenceClasses out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const auto& cls) { return is_near_integer(b[i] - cls.front().value); });
    if (it == out.classes.end())
      out.classes.push_back({{static_cast<int>(i), b[i]}});
    else
      it->push_back({static_cast<int>(i), b[i]});
  }
  for (auto& cls : out.classes)
    std::stable_sort(cls.begin(), cls.end(), [](const ClassMember& x, const ClassMember& y) {
      return x.value.real() > y.value.real();
    });
  auto key = [](const std::vector<ClassMember>& cls) {
    const Cplx rep = cls.front().value;
    const int first = std::min_element(cls.begin(), cls.end(), [](const auto& x, const auto& y) {
                        return x.index < y.index;
                      })->index;
    return std::tuple(rep.real() - std::floor(rep.real()), rep.imag(), first);
  };
  std::stable_sort(out.classes.begin(), out.classes.end(),
                   [&](const auto& x, const auto& y) { return key(x) < key(y); });
  return out;
}

SeriesEvalReport meijer_g_residue_sum_log(const GParams& g, Cplx log_zeta, double tol, int max_terms) {
  validate(g);
  if (g.m == 0) return {};
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidParams, "tolerance must be positive");
  require_finite(log_zeta, "log zeta");

  const Integrand f = integrand_of(g);
  const auto ladders = build_ladders(g);
  long guard = 0;
  bool all_cancel = true;
  for (const auto& l : ladders) {
    guard = std::max(guard, l.last_special_offset);
    all_cancel = all_cancel && l.asymptotic_order <= 0;
  }

  SeriesEvalReport report;
  Cplx sum = 0.0;
  int small_run = 0;
  for (long n = 0; n < max_terms; ++n) {
    Cplx contribution = 0.0;
    for (const auto& l : ladders) {
      const int mult = multiplicity_at(l, n);
      const Cplx center = l.base + static_cast<double>(n);
      const LaurentJet r = integrand_jet(f, center, jet_order_for(mult));
      contribution += negated_residue(r, log_zeta);
    }
    sum += contribution;
    report.terms_used = static_cast<int>(n) + 1;
    if (n > guard && all_cancel) break;  // every further pole is cancelled
    small_run = (n > guard && std::abs(contribution) < tol * std::abs(sum)) ? small_run + 1 : 0;
    if (small_run >= 3) {
      report.est_error = std::abs(contribution);
      report.value = sum;
      require_finite(report.value, "G-function value");
      return report;
    }
  }
  if (all_cancel) {
    report.value = sum;
    return report;
  }
  throw Error(ErrorKind::NoConvergence,
              "residue sum did not converge within " + std::to_string(max_terms) + " poles");
}

SeriesEvalReport meijer_g_residue_sum(const GParams& g, Cplx zeta, double tol, int max_terms) {
  validate(g);
  if (g.m == 0) return {};
  require_finite(zeta, "zeta");
  if (zeta == Cplx{}) throw Error(ErrorKind::ZeroPoint, "G-function evaluated at zeta = 0");
  return meijer_g_residue_sum_log(g, std::log(zeta), tol, max_terms);
}

bool has_distinct_numerator_classes(const GParams& g) {
  return pairwise_noninteger(std::vector<Cplx>(g.b.begin(), g.b.begin() + g.m));
}

bool has_distinct_classes(const GParams& g) { return pairwise_noninteger(g.b); }

SeriesEvalReport meijer_g_generic(const GParams& g, Cplx zeta, double tol, int max_terms) {
  validate(g);
  if (!has_distinct_numerator_classes(g))
    throw Error(ErrorKind::NonGenericParameters, "numerator b parameters differ by integers");
  if (g.m == 0) return {};
  require_finite(zeta, "zeta");
  if (zeta == Cplx{}) throw Error(ErrorKind::ZeroPoint, "G-function evaluated at zeta = 0");

  const double sign = ((g.p() - g.m - g.n) % 2 == 0) ? 1.0 : -1.0;
  const Cplx log_zeta = std::log(zeta);
  SeriesEvalReport report;
  for (int j = 0; j < g.m; ++j) {
    const Cplx bj = g.b[static_cast<std::size_t>(j)];
    // Gamma(b_j' - b_j) / Gamma(1 + b_j - b_j') folds into the reflection
    // formula once the series is regularized over every lower parameter.
    Cplx pref = 1.0;
    for (int jj = 0; jj < g.m; ++jj)
      if (jj != j) pref *= kPi / sin_pi(g.b[static_cast<std::size_t>(jj)] - bj);
    for (int k = 0; k < g.n; ++k) pref *= gamma(1.0 + bj - g.a[static_cast<std::size_t>(k)]);
    for (int k = g.n; k < g.p(); ++k) pref *= recip_gamma(g.a[static_cast<std::size_t>(k)] - bj);

    PhqParams h;
    for (const auto& ak : g.a) h.alphas.push_back(1.0 + bj - ak);
    for (int jj = 0; jj < g.q(); ++jj)
      if (jj != j) h.betas.push_back(1.0 + bj - g.b[static_cast<std::size_t>(jj)]);
    const SeriesEvalReport s = phq_regularized(h, sign * zeta, tol, max_terms);
    const Cplx w = pref * std::exp(bj * log_zeta);
    report.value += w * s.value;
    report.terms_used += s.terms_used;
    report.est_error += std::abs(w) * s.est_error;
  }
  require_finite(report.value, "G-function value");
  return report;
}

double g1p_identity_check(const GParams& g, Cplx zeta) {
  validate(g);
  if (!has_distinct_numerator_classes(g))
    throw Error(ErrorKind::NonGenericParameters, "numerator b parameters differ by integers");
  if (g.m == 0) return 0.0;

  constexpr double kTol = 1e-16;
  const Cplx lhs = meijer_g_generic(g, zeta, kTol).value;
  const int shift = g.p() + 1 - g.m - g.n;
  // Branch of log((-1)^shift zeta) for which the phase factors below cancel.
  const Cplx log_arg = std::log(zeta) + kI * (kPi * shift);

  Cplx rhs = 0.0;
  for (int j = 0; j < g.m; ++j) {
    const Cplx bj = g.b[static_cast<std::size_t>(j)];
    Cplx coeff = std::exp(-kI * kPi * bj * static_cast<double>(shift));
    for (int jj = 0; jj < g.m; ++jj)
      if (jj != j) coeff *= kPi / sin_pi(g.b[static_cast<std::size_t>(jj)] - bj);
    // 1 / [Gamma(1 + b_j - a_k) Gamma(a_k - b_j)] = sin(pi (a_k - b_j)) / pi
    for (int k = g.n; k < g.p(); ++k) coeff *= sin_pi(g.a[static_cast<std::size_t>(k)] - bj) / kPi;
    if (coeff == Cplx{}) continue;

    GParams one;
    one.m = 1;
    one.n = g.p();
    one.a = g.a;
    one.b.push_back(bj);
    for (int jj = 0; jj < g.q(); ++jj)
      if (jj != j) one.b.push_back(g.b[static_cast<std::size_t>(jj)]);
    rhs += coeff * meijer_g_residue_sum_log(one, log_arg, kTol).value;
  }
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

std::vector<LogPowerSeries> meijer_fundamental_system_generic(const GParams& g, int trunc) {
  validate(g);
  if (!has_distinct_classes(g))
    throw Error(ErrorKind::NonGenericParameters, "b parameters differ by integers");
  const int sign = ((g.p() - g.m - g.n) % 2 == 0) ? 1 : -1;
  std::vector<LogPowerSeries> out;
  for (int j = 0; j < g.q(); ++j) {
    const Cplx bj = g.b[static_cast<std::size_t>(j)];
    PhqParams h;
    for (const auto& ak : g.a) h.alphas.push_back(1.0 + bj - ak);
    for (int jj = 0; jj < g.q(); ++jj)
      if (jj != j) h.betas.push_back(1.0 + bj - g.b[static_cast<std::size_t>(jj)]);
    out.push_back(phq_log_series(h, bj, sign, trunc));
  }
  return out;
}

double meijer_general_ode_residual(const GParams& g, const LogPowerSeries& u) {
  LogPowerSeries left = u;
  for (const auto& bj : g.b) left = theta_plus(left, -bj);
  LogPowerSeries right = u;
  for (const auto& ak : g.a) right = theta_plus(right, 1.0 - ak);
  const double sign = ((g.m + g.n - g.p()) % 2 == 0) ? 1.0 : -1.0;
  right = series_scale(times_zeta(right), -sign);
  return residual_norm(u, series_add(left, right));
}

LogPowerSeries g_m0_log_series(const std::vector<Cplx>& b, int k, int trunc) {
  const int q = static_cast<int>(b.size());
  if (k < 1 || k > q) throw Error(ErrorKind::BadPrefix, "prefix size must lie in [1, q]");
  if (trunc < 0) throw Error(ErrorKind::InvalidParams, "negative truncation order");
  for (const auto& v : b) require_finite(v, "parameter b");
  constexpr double kRealTol = 1e-9;
  for (int i = 1; i < k; ++i) {
    const auto& cur = b[static_cast<std::size_t>(i)];
    if (!is_near_integer(cur - b[0]))
      throw Error(ErrorKind::BadPrefix, "prefix entries are not in one congruence class");
    if (cur.real() > b[static_cast<std::size_t>(i - 1)].real() + kRealTol)
      throw Error(ErrorKind::BadPrefix, "prefix entries are not sorted by decreasing real part");
  }
  const Cplx base = b[static_cast<std::size_t>(k - 1)];
  for (int j = k; j < q; ++j) {
    const auto& v = b[static_cast<std::size_t>(j)];
    if (is_near_integer(v - b[0]) && v.real() > base.real() + kRealTol)
      throw Error(ErrorKind::BadPrefix, "a class member outside the prefix has a larger real part");
  }

  Integrand f;
  f.gamma_minus.assign(b.begin(), b.begin() + k);
  for (int j = k; j < q; ++j) f.recip_plus.push_back(1.0 - b[static_cast<std::size_t>(j)]);
  std::vector<long> offsets;
  for (int i = 0; i < k; ++i) offsets.push_back(nearest_integer(b[static_cast<std::size_t>(i)] - base));

  LogPowerSeries u;
  u.trunc_order = trunc;
  u.arg_sign = (k % 2 == 0) ? 1 : -1;
  for (int n = 0; n <= trunc; ++n) {
    int mult = 0;
    for (long d : offsets)
      if (d <= n) ++mult;
    const Cplx center = base + static_cast<double>(n);
    const LaurentJet r = integrand_jet(f, center, jet_order_for(mult));
    double fact = 1.0;
    for (int kk = 0; kk < r.pole_order; ++kk) {
      if (kk > 0) fact *= kk;
      const Cplx c = -r.coeff(-1 - kk) / fact;
      if (c != Cplx{}) u.terms.push_back({center, kk, c});
    }
  }
  return canonicalize(std::move(u));
}

std::vector<LogPowerSeries> fundamental_system_0q(const std::vector<Cplx>& b, int trunc) {
  const auto parts = congruence_partition(b);
  std::vector<LogPowerSeries> out;
  for (const auto& cls : parts.classes) {
    std::vector<Cplx> ordered;
    std::vector<bool> in_class(b.size(), false);
    for (const auto& mem : cls) {
      ordered.push_back(mem.value);
      in_class[static_cast<std::size_t>(mem.index)] = true;
    }
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!in_class[i]) ordered.push_back(b[i]);
    for (int k = 1; k <= static_cast<int>(cls.size()); ++k) out.push_back(g_m0_log_series(ordered, k, trunc));
  }
  return out;
}

double meijer_ode_residual(const std::vector<Cplx>& b, const LogPowerSeries& u) {
  LogPowerSeries left = u;
  for (const auto& bj : b) left = theta_plus(left, -bj);
  return residual_norm(u, series_add(left, series_scale(times_zeta(u), -1.0)));
}

}  // namespace eulerg
