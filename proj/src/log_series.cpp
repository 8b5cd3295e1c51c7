#include "eulerg/log_series.hpp"

#include <algorithm>
#include <cmath>

#include "eulerg/numeric.hpp"

namespace eulerg {
namespace {

bool same_exponent(Cplx a, Cplx b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
}

void require_same_sign(const LogPowerSeries& u, const LogPowerSeries& v) {
  if (u.arg_sign != v.arg_sign && !u.terms.empty() && !v.terms.empty())
    throw Error(ErrorKind::InvalidParams, "cannot combine series in different variables");
}

// Lowest exponent of every integer-difference class present in u.
std::vector<Cplx> class_bases(const LogPowerSeries& u) {
  std::vector<Cplx> bases;
  for (const auto& t : u.terms) {
    bool found = false;
    for (auto& b : bases) {
      if (is_near_integer(t.exponent - b)) {
        if (t.exponent.real() < b.real()) b = t.exponent;
        found = true;
        break;
      }
    }
    if (!found) bases.push_back(t.exponent);
  }
  return bases;
}

// Offset of `e` above the matching base, or -1 when no class matches.
long offset_in(const std::vector<Cplx>& bases, Cplx e) {
  for (const auto& b : bases)
    if (is_near_integer(e - b)) return nearest_integer(e - b);
  return -1;
}

// x^e with the integer part of e applied by repeated squaring, so that
// integer exponents of a real x stay real and large offsets lose no digits
// to exp(e log x).
Cplx power(Cplx x, Cplx log_x, Cplx e) {
  const long n = std::lround(e.real());
  const Cplx frac = e - static_cast<double>(n);
  Cplx base = n < 0 ? 1.0 / x : x;
  unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  Cplx r = frac == Cplx{} ? Cplx(1.0) : std::exp(frac * log_x);
  while (k > 0) {
    if (k & 1UL) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

// x = arg_sign * zeta. Negating a real zeta leaves a signed zero imaginary
// part that would put std::log on the lower edge of the cut; negative reals
// belong to arg = +pi on the principal branch.
Cplx series_variable(const LogPowerSeries& u, Cplx zeta) {
  Cplx x = static_cast<double>(u.arg_sign) * zeta;
  if (x.imag() == 0.0) x.imag(0.0);
  return x;
}

}  // namespace

LogPowerSeries canonicalize(LogPowerSeries u) {
  auto& t = u.terms;
  std::stable_sort(t.begin(), t.end(), [](const LogTerm& a, const LogTerm& b) {
    if (a.exponent.real() != b.exponent.real()) return a.exponent.real() < b.exponent.real();
    if (a.exponent.imag() != b.exponent.imag()) return a.exponent.imag() < b.exponent.imag();
    return a.log_power < b.log_power;
  });
  std::vector<LogTerm> out;
  out.reserve(t.size());
  for (const auto& term : t) {
    bool merged = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      const double tol = 1e-12 * std::max(1.0, std::abs(term.exponent));
      if (term.exponent.real() - it->exponent.real() > tol) break;
      if (it->log_power == term.log_power && same_exponent(it->exponent, term.exponent)) {
        it->coeff += term.coeff;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(term);
  }
  std::erase_if(out, [](const LogTerm& x) { return x.coeff == Cplx{}; });
  t = std::move(out);
  return u;
}

LogPowerSeries series_add(const LogPowerSeries& u, const LogPowerSeries& v) {
  require_same_sign(u, v);
  LogPowerSeries r;
  r.arg_sign = u.terms.empty() ? v.arg_sign : u.arg_sign;
  r.trunc_order = std::min(u.trunc_order, v.trunc_order);
  r.terms = u.terms;
  r.terms.insert(r.terms.end(), v.terms.begin(), v.terms.end());
  return canonicalize(std::move(r));
}

LogPowerSeries series_scale(const LogPowerSeries& u, Cplx s) {
  LogPowerSeries r = u;
  for (auto& t : r.terms) t.coeff *= s;
  return canonicalize(std::move(r));
}

LogPowerSeries theta_plus(const LogPowerSeries& u, Cplx shift) {
  // theta (x^e L^k) = e x^e L^k + k x^e L^{k-1}
  LogPowerSeries r;
  r.arg_sign = u.arg_sign;
  r.trunc_order = u.trunc_order;
  r.terms.reserve(2 * u.terms.size());
  for (const auto& t : u.terms) {
    r.terms.push_back({t.exponent, t.log_power, (t.exponent + shift) * t.coeff});
    if (t.log_power > 0)
      r.terms.push_back({t.exponent, t.log_power - 1, static_cast<double>(t.log_power) * t.coeff});
  }
  return canonicalize(std::move(r));
}

LogPowerSeries times_zeta(const LogPowerSeries& u) {
  LogPowerSeries r = u;
  for (auto& t : r.terms) {
    t.exponent += 1.0;
    t.coeff *= static_cast<double>(u.arg_sign);
  }
  return r;
}

double max_coeff(const LogPowerSeries& u) {
  double m = 0.0;
  for (const auto& t : u.terms) m = std::max(m, std::abs(t.coeff));
  return m;
}

int max_log_power(const LogPowerSeries& u) {
  int m = 0;
  for (const auto& t : u.terms)
    if (t.coeff != Cplx{}) m = std::max(m, t.log_power);
  return m;
}

double residual_norm(const LogPowerSeries& source, const LogPowerSeries& residual) {
  const auto bases = class_bases(source);
  double worst = 0.0;
  for (const auto& t : residual.terms) {
    const long off = offset_in(bases, t.exponent);
    if (off >= source.trunc_order) continue;
    worst = std::max(worst, std::abs(t.coeff));
  }
  return worst;
}

Cplx evaluate(const LogPowerSeries& u, Cplx zeta) {
  require_finite(zeta, "series argument");
  if (zeta == Cplx{}) throw Error(ErrorKind::ZeroPoint, "log-power series evaluated at 0");
  const Cplx x = series_variable(u, zeta);
  const Cplx log_x = std::log(x);
  Cplx sum = 0.0;
  for (const auto& t : u.terms) {
    Cplx v = t.coeff * power(x, log_x, t.exponent);
    for (int k = 0; k < t.log_power; ++k) v *= log_x;
    sum += v;
  }
  return sum;
}

double tail_magnitude(const LogPowerSeries& u, Cplx zeta) {
  if (u.terms.empty() || zeta == Cplx{}) return 0.0;
  const auto bases = class_bases(u);
  const Cplx x = series_variable(u, zeta);
  const Cplx log_x = std::log(x);
  double tail = 0.0;
  for (const auto& t : u.terms) {
    if (offset_in(bases, t.exponent) < u.trunc_order) continue;
    Cplx v = t.coeff * power(x, log_x, t.exponent);
    for (int k = 0; k < t.log_power; ++k) v *= log_x;
    tail += std::abs(v);
  }
  return tail;
}

LeadingTerm leading_asymptotics(const LogPowerSeries& u) {
  const LogTerm* best = nullptr;
  for (const auto& t : u.terms) {
    if (t.coeff == Cplx{}) continue;
    if (best == nullptr) {
      best = &t;
      continue;
    }
    const double tol = 1e-12 * std::max(1.0, std::abs(t.exponent.real()));
    const double d = t.exponent.real() - best->exponent.real();
    if (d < -tol || (std::abs(d) <= tol && t.log_power > best->log_power)) best = &t;
  }
  if (best == nullptr) throw Error(ErrorKind::EmptySeries, "leading term of an empty series");
  return {best->exponent, best->log_power, best->coeff};
}

Cplx determinant(std::vector<std::vector<Cplx>> a) {
  const std::size_t n = a.size();
  Cplx det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (a[piv][col] == Cplx{}) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Cplx f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

Wronskian generalized_wronskian(const std::vector<LogPowerSeries>& ys, Cplx zeta0) {
  const std::size_t q = ys.size();
  std::vector<std::vector<Cplx>> m(q, std::vector<Cplx>(q));
  for (std::size_t j = 0; j < q; ++j) {
    LogPowerSeries d = ys[j];
    for (std::size_t i = 0; i < q; ++i) {
      m[i][j] = evaluate(d, zeta0);
      if (i + 1 < q) d = theta_plus(d, 0.0);
    }
  }
  Wronskian w;
  w.det = determinant(m);
  // Each solution is only defined up to a constant factor, so the columns
  // are brought to unit norm before comparing |det| with the row norms.
  for (std::size_t j = 0; j < q; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < q; ++i) s += std::norm(m[i][j]);
    s = std::sqrt(s);
    if (s > 0.0)
      for (std::size_t i = 0; i < q; ++i) m[i][j] /= s;
  }
  double norm_product = 1.0;
  for (const auto& row : m) {
    double s = 0.0;
    for (const auto& v : row) s += std::norm(v);
    norm_product *= std::sqrt(s);
  }
  w.normalized = norm_product > 0.0 ? std::abs(determinant(m)) / norm_product : 0.0;
  return w;
}

}  // namespace eulerg
