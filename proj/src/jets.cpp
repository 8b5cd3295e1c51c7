#include "eulerg/jets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulerg/scalar_gamma.hpp"

namespace eulerg {
namespace {

using Coeffs = std::vector<Cplx>;

void require_same_center(const LaurentJet& x, const LaurentJet& y) {
  const double scale = std::max(1.0, std::abs(x.center));
  if (std::abs(x.center - y.center) > 1e-12 * scale)
    throw Error(ErrorKind::CenterMismatch, "jets expanded about different points");
}

// Power series helpers on plain coefficient vectors a_0..a_K.

Coeffs series_mul(const Coeffs& a, const Coeffs& b, std::size_t len) {
  Coeffs c(len, Cplx{});
  for (std::size_t i = 0; i < std::min(a.size(), len); ++i) {
    if (a[i] == Cplx{}) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Coeffs series_div(const Coeffs& a, const Coeffs& b, std::size_t len) {
  Coeffs c(len, Cplx{});
  const Cplx inv = 1.0 / b[0];
  for (std::size_t k = 0; k < len; ++k) {
    Cplx acc = k < a.size() ? a[k] : Cplx{};
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * c[k - j];
    c[k] = acc * inv;
  }
  return c;
}

// exp(sum_{k>=1} a_k t^k) through the recurrence k g_k = sum_j j a_j g_{k-j}.
Coeffs series_exp_of_tail(const Coeffs& a) {
  Coeffs g(a.size(), Cplx{});
  g[0] = 1.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    Cplx acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * g[k - j];
    g[k] = acc / static_cast<double>(k);
  }
  return g;
}

// Taylor coefficients of ln Gamma(z0 + s t) - ln Gamma(z0), orders 1..order.
Coeffs log_gamma_tail(Cplx z0, int sign, int order) {
  if (order > kMaxJetOrder + 1)
    throw Error(ErrorKind::InvalidParams,
                "jet order " + std::to_string(order) + " exceeds the supported maximum");
  Coeffs a(static_cast<std::size_t>(order) + 1, Cplx{});
  double factorial = 1.0;
  double s_pow = 1.0;
  for (int k = 1; k <= order; ++k) {
    factorial *= k;
    s_pow *= sign;
    a[static_cast<std::size_t>(k)] = polygamma(k - 1, z0) * (s_pow / factorial);
  }
  return a;
}

// Regular expansions at a point z0 that is not a pole.
Coeffs regular_gamma_coeffs(Cplx z0, int sign, int order) {
  Coeffs g = series_exp_of_tail(log_gamma_tail(z0, sign, order));
  const Cplx g0 = gamma(z0);
  for (auto& c : g) c *= g0;
  return g;
}

Coeffs regular_recip_gamma_coeffs(Cplx z0, int sign, int order) {
  Coeffs a = log_gamma_tail(z0, sign, order);
  for (auto& c : a) c = -c;
  Coeffs g = series_exp_of_tail(a);
  const Cplx r0 = recip_gamma(z0);
  for (auto& c : g) c *= r0;
  return g;
}

// prod_{k=0}^{n-1} (k - n + s t): the nonvanishing factors that separate
// Gamma(-n + s t) from Gamma(1 + s t).
Coeffs shifted_factor_poly(int n, int sign) {
  Coeffs poly{1.0};
  for (int k = 0; k < n; ++k) {
    Coeffs next(poly.size() + 1, Cplx{});
    const double c0 = static_cast<double>(k - n);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += c0 * poly[i];
      next[i + 1] += static_cast<double>(sign) * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

void require_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidParams, "sign must be +1 or -1");
}

}  // namespace

Cplx LaurentJet::coeff(int k) const {
  if (k < -pole_order || k > order) return Cplx{};
  return coeffs[static_cast<std::size_t>(k + pole_order)];
}

LaurentJet make_jet(Cplx center, int pole_order, std::vector<Cplx> coeffs) {
  if (pole_order < 0) throw Error(ErrorKind::InvalidParams, "negative pole order");
  if (coeffs.size() < static_cast<std::size_t>(pole_order))
    throw Error(ErrorKind::InvalidParams, "jet coefficient vector too short");
  LaurentJet j;
  j.center = center;
  j.order = static_cast<int>(coeffs.size()) - 1 - pole_order;
  std::size_t drop = 0;
  while (pole_order > 0 && drop < coeffs.size() && coeffs[drop] == Cplx{}) {
    ++drop;
    --pole_order;
  }
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(drop));
  j.pole_order = pole_order;
  j.coeffs = std::move(coeffs);
  return j;
}

LaurentJet unit_jet(Cplx value, Cplx center, int order) {
  std::vector<Cplx> c(static_cast<std::size_t>(order) + 1, Cplx{});
  c[0] = value;
  return make_jet(center, 0, std::move(c));
}

LaurentJet monomial_jet(Cplx center, int power, int order) {
  if (power > order) return make_jet(center, 0, std::vector<Cplx>(static_cast<std::size_t>(order) + 1));
  const int p = power < 0 ? -power : 0;
  std::vector<Cplx> c(static_cast<std::size_t>(p + order) + 1, Cplx{});
  c[static_cast<std::size_t>(power + p)] = 1.0;
  return make_jet(center, p, std::move(c));
}

LaurentJet jet_add(const LaurentJet& x, const LaurentJet& y) {
  require_same_center(x, y);
  const int p = std::max(x.pole_order, y.pole_order);
  const int k = std::min(x.order, y.order);
  std::vector<Cplx> c(static_cast<std::size_t>(p + k) + 1, Cplx{});
  for (int i = -p; i <= k; ++i) c[static_cast<std::size_t>(i + p)] = x.coeff(i) + y.coeff(i);
  return make_jet(x.center, p, std::move(c));
}

LaurentJet jet_scale(const LaurentJet& x, Cplx s) {
  LaurentJet r = x;
  for (auto& c : r.coeffs) c *= s;
  return make_jet(r.center, r.pole_order, std::move(r.coeffs));
}

LaurentJet jet_mul(const LaurentJet& x, const LaurentJet& y) {
  require_same_center(x, y);
  const int p = x.pole_order + y.pole_order;
  const int k = std::min(x.order - y.pole_order, y.order - x.pole_order);
  if (k < -p) throw Error(ErrorKind::InvalidParams, "jet truncation order too small for product");
  std::vector<Cplx> c(static_cast<std::size_t>(p + k) + 1, Cplx{});
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == Cplx{}) continue;
    for (std::size_t j = 0; j < y.coeffs.size() && i + j < c.size(); ++j)
      c[i + j] += x.coeffs[i] * y.coeffs[j];
  }
  return make_jet(x.center, p, std::move(c));
}

LaurentJet jet_recip(const LaurentJet& x) {
  auto it = std::find_if(x.coeffs.begin(), x.coeffs.end(), [](Cplx c) { return c != Cplx{}; });
  if (it == x.coeffs.end()) throw Error(ErrorKind::ZeroJet, "reciprocal of a zero jet");
  const std::size_t first = static_cast<std::size_t>(it - x.coeffs.begin());
  const int lead_power = static_cast<int>(first) - x.pole_order;
  Coeffs unit(x.coeffs.begin() + static_cast<std::ptrdiff_t>(first), x.coeffs.end());
  Coeffs inv = series_div(Coeffs{1.0}, unit, unit.size());

  const int low = -lead_power;  // lowest power of the result
  if (low < 0) return make_jet(x.center, -low, std::move(inv));
  Coeffs c(static_cast<std::size_t>(low), Cplx{});
  c.insert(c.end(), inv.begin(), inv.end());
  return make_jet(x.center, 0, std::move(c));
}

LaurentJet gamma_affine_jet(Cplx c, int sign, Cplx center, int order) {
  require_sign(sign);
  const Cplx z0 = c + static_cast<double>(sign) * center;
  const int n = nonpositive_integer_index(z0);
  if (n < 0) return make_jet(center, 0, regular_gamma_coeffs(z0, sign, order));

  // Gamma(-n + s t) = Gamma(1 + s t) / [Q(t) * s t]
  const auto len = static_cast<std::size_t>(order) + 2;
  Coeffs ratio = series_div(regular_gamma_coeffs(1.0, sign, order + 1), shifted_factor_poly(n, sign), len);
  for (auto& v : ratio) v /= static_cast<double>(sign);
  return make_jet(center, 1, std::move(ratio));
}

LaurentJet recip_gamma_affine_jet(Cplx c, int sign, Cplx center, int order) {
  require_sign(sign);
  const Cplx z0 = c + static_cast<double>(sign) * center;
  const int n = nonpositive_integer_index(z0);
  if (n < 0) return make_jet(center, 0, regular_recip_gamma_coeffs(z0, sign, order));

  // 1/Gamma(-n + s t) = s t * Q(t) / Gamma(1 + s t)
  Coeffs out(static_cast<std::size_t>(order) + 1, Cplx{});
  if (order >= 1) {
    const auto len = static_cast<std::size_t>(order);
    Coeffs w = series_mul(shifted_factor_poly(n, sign), regular_recip_gamma_coeffs(1.0, sign, order - 1), len);
    for (std::size_t i = 0; i < len; ++i) out[i + 1] = static_cast<double>(sign) * w[i];
  }
  return make_jet(center, 0, std::move(out));
}

LaurentJet gamma_jet(Cplx c, Cplx center, int order) { return gamma_affine_jet(c, -1, center, order); }

LaurentJet recip_gamma_jet(Cplx c, Cplx center, int order) {
  return recip_gamma_affine_jet(c, 1, center, order);
}

LaurentJet exp_linear_jet(Cplx log_base, Cplx center, int order) {
  std::vector<Cplx> c(static_cast<std::size_t>(order) + 1);
  Cplx v = std::exp(center * log_base);
  for (int k = 0; k <= order; ++k) {
    c[static_cast<std::size_t>(k)] = v;
    v *= log_base / static_cast<double>(k + 1);
  }
  return make_jet(center, 0, std::move(c));
}

LaurentJet power_jet(Cplx zeta, Cplx center, int order) {
  require_finite(zeta, "power_jet base");
  if (zeta == Cplx{}) throw Error(ErrorKind::ZeroBase, "zeta^omega with zeta = 0");
  return exp_linear_jet(std::log(zeta), center, order);
}

Cplx residue(const LaurentJet& x) { return x.coeff(-1); }

}  // namespace eulerg
