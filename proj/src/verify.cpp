#include "eulerg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "eulerg/euler.hpp"
#include "eulerg/jets.hpp"
#include "eulerg/meijer.hpp"
#include "eulerg/nonhomo.hpp"
#include "eulerg/numeric.hpp"
#include "eulerg/scalar_gamma.hpp"

namespace eulerg {
namespace {

constexpr double kPi = std::numbers::pi;

// Portable draws: the bit pattern of mt19937_64 is fixed by the standard,
// the distributions of <random> are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Cplx box(double re, double im) {
    const double x = uniform(-re, re);
    const double y = uniform(-im, im);
    return {x, y};
  }
  Cplx disk(double rmin, double rmax) {
    const double r = uniform(rmin, rmax);
    const double t = uniform(-kPi, kPi);
    return std::polar(r, t);
  }

 private:
  std::mt19937_64 gen_;
};

double rel(Cplx got, Cplx want) {
  const double scale = std::max({std::abs(got), std::abs(want), 1e-300});
  return std::abs(got - want) / scale;
}

class Worst {
 public:
  explicit Worst(bool lower = false) : lower_(lower), v_(lower ? INFINITY : 0.0) {}
  void add(double x) {
    if (std::isnan(v_)) return;
    if (std::isnan(x) || (lower_ ? x < v_ : x > v_)) v_ = x;
  }
  double value() const { return v_; }

 private:
  bool lower_;
  double v_;
};

double distance_to_pole(Cplx z) {
  if (z.real() > 0.5) return INFINITY;
  return std::abs(z - std::round(z.real()));
}

class Runner {
 public:
  Runner(std::string suite, VerifyOutcome& out) : suite_(std::move(suite)), out_(out) {}

  void upper(const std::string& name, double limit, const std::function<double()>& body) {
    run(name, limit, false, body);
  }
  void lower(const std::string& name, double limit, const std::function<double()>& body) {
    run(name, limit, true, body);
  }

 private:
  void run(const std::string& name, double limit, bool is_lower, const std::function<double()>& body) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.limit = limit;
    r.lower_bound = is_lower;
    try {
      r.worst = body();
      r.pass = is_lower ? (r.worst > limit) : (r.worst <= limit);
    } catch (const std::exception& e) {
      r.worst = NAN;
      r.pass = false;
      r.note = e.what();
    }
    out_.checks.push_back(std::move(r));
  }

  std::string suite_;
  VerifyOutcome& out_;
};

// ---------------------------------------------------------------- gamma --

void suite_gamma(Rng& rng, Runner& run) {
  run.upper("recurrence Gamma(z+1) = z Gamma(z), 1000 pts", 1e-12, [&] {
    Worst w;
    for (int i = 0; i < 1000; ++i) {
      const Cplx z = rng.box(10.0, 10.0);
      if (distance_to_pole(z) < 0.05) continue;
      w.add(rel(gamma(z + 1.0), z * gamma(z)));
    }
    return w.value();
  });
  run.upper("log_gamma recurrence modulo 2 pi i, 1000 pts", 1e-9, [&] {
    Worst w;
    for (int i = 0; i < 1000; ++i) {
      const Cplx z = rng.box(10.0, 10.0);
      if (distance_to_pole(z) < 0.05) continue;
      const Cplx d = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
      const double turns = d.imag() / (2.0 * kPi);
      const double scale = std::max(1.0, std::abs(log_gamma(z)));
      w.add(std::hypot(d.real(), 2.0 * kPi * (turns - std::round(turns))) / scale);
    }
    return w.value();
  });
  run.upper("reflection 1/Gamma(z) 1/Gamma(1-z) = sin(pi z)/pi, 1000 pts", 1e-12, [&] {
    Worst w;
    for (int i = 0; i < 1000; ++i) {
      const Cplx z = rng.box(10.0, 10.0);
      w.add(rel(recip_gamma(z) * recip_gamma(1.0 - z), sin_pi(z) / kPi));
    }
    return w.value();
  });
  run.upper("pochhammer step is exact in the product regime", 0.0, [&] {
    double mismatches = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Cplx g = rng.box(5.0, 5.0);
      for (int k = 0; k < 64; ++k)
        if (pochhammer(g, k + 1) != pochhammer(g, k) * (g + static_cast<double>(k))) mismatches += 1.0;
    }
    return mismatches;
  });
  run.upper("1/Gamma(n) = 1/(n-1)! for n = 1..20", 1e-14, [] {
    Worst w;
    double fact = 1.0;
    for (int n = 1; n <= 20; ++n) {
      if (n > 1) fact *= n - 1;
      w.add(rel(recip_gamma(static_cast<double>(n)), 1.0 / fact));
    }
    return w.value();
  });
  run.upper("digamma vs central difference of log_gamma, 100 pts", 1e-6, [&] {
    Worst w;
    int used = 0;
    while (used < 100) {
      const Cplx z = rng.disk(0.0, 10.0);
      if (distance_to_pole(z) < 0.5) continue;
      ++used;
      const double h = 1e-4;
      const Cplx fd = (log_gamma(z + h) - log_gamma(z - h)) / (2.0 * h);
      const Cplx psi = polygamma(0, z);
      w.add(std::abs(fd - psi) / std::max(1.0, std::abs(psi)));
    }
    return w.value();
  });
}

// ----------------------------------------------------------------- jets --

LaurentJet random_jet(Rng& rng, Cplx center, int pole_order, int length) {
  std::vector<Cplx> c;
  for (int i = 0; i < length; ++i) c.push_back(rng.box(1.0, 1.0));
  return make_jet(center, pole_order, std::move(c));
}

double jet_distance(const LaurentJet& x, const LaurentJet& y) {
  double diff = 0.0;
  double scale = 1e-300;
  const int lo = std::min(x.lowest(), y.lowest());
  const int hi = std::min(x.highest(), y.highest());
  for (int k = lo; k <= hi; ++k) {
    diff = std::max(diff, std::abs(x.coeff(k) - y.coeff(k)));
    scale = std::max({scale, std::abs(x.coeff(k)), std::abs(y.coeff(k))});
  }
  return diff / scale;
}

void suite_jets(Rng& rng, Runner& run) {
  run.upper("residue of Gamma(b - w) at w = b + n is (-1)^(n+1)/n!", 1e-13, [&] {
    Worst w;
    for (int i = 0; i < 20; ++i) {
      const Cplx b = rng.box(3.0, 3.0);
      double fact = 1.0;
      for (int n = 0; n <= 8; ++n) {
        if (n > 0) fact *= n;
        const double want = ((n + 1) % 2 == 0 ? 1.0 : -1.0) / fact;
        w.add(rel(residue(gamma_jet(b, b + static_cast<double>(n), default_jet_order(1))), want));
      }
    }
    return w.value();
  });
  run.upper("ring axioms on regular jets", 1e-12, [&] {
    Worst w;
    for (int i = 0; i < 50; ++i) {
      const Cplx c = rng.box(1.0, 1.0);
      const auto x = random_jet(rng, c, 0, 8);
      const auto y = random_jet(rng, c, 0, 8);
      const auto z = random_jet(rng, c, 0, 8);
      w.add(jet_distance(jet_mul(x, jet_mul(y, z)), jet_mul(jet_mul(x, y), z)));
      w.add(jet_distance(jet_mul(x, jet_add(y, z)), jet_add(jet_mul(x, y), jet_mul(x, z))));
    }
    return w.value();
  });
  run.upper("residue of a product equals the convolution sum", 1e-14, [&] {
    Worst w;
    for (int i = 0; i < 50; ++i) {
      const Cplx c = rng.box(1.0, 1.0);
      const int px = rng.integer(0, 3);
      const int py = rng.integer(0, 3);
      const auto x = random_jet(rng, c, px, 8);
      const auto y = random_jet(rng, c, py, 8);
      Cplx want = 0.0;
      for (int k = x.lowest(); k <= x.highest(); ++k) want += x.coeff(k) * y.coeff(-1 - k);
      w.add(rel(residue(jet_mul(x, y)), want));
    }
    return w.value();
  });
  run.upper("gamma_jet Taylor polynomial at a regular center", 1e-8, [&] {
    Worst w;
    int used = 0;
    while (used < 20) {
      const Cplx c = rng.box(3.0, 3.0);
      const Cplx center = rng.box(1.0, 1.0);
      if (distance_to_pole(c - center) < 0.3) continue;
      ++used;
      const auto j = gamma_jet(c, center, 10);
      for (const double t : {0.02, -0.02}) {
        Cplx poly = 0.0;
        for (int k = j.highest(); k >= j.lowest(); --k) poly = poly * t + j.coeff(k);
        w.add(rel(poly, gamma(c - center - t)));
      }
    }
    return w.value();
  });
}

// ------------------------------------------------------------- hypergeo --

PhqParams random_phq(Rng& rng, int r, int s, double re = 2.0, double im = 1.0) {
  PhqParams p;
  for (int i = 0; i < r; ++i) p.alphas.push_back(rng.box(re, im));
  for (int i = 0; i < s; ++i) {
    Cplx b;
    do b = rng.box(re, im);
    while (distance_to_pole(b) < 0.1);
    p.betas.push_back(b);
  }
  return p;
}

void suite_hypergeo(Rng& rng, Runner& run) {
  run.upper("value 1 at zeta = 0, 200 parameter sets", 0.0, [&] {
    double bad = 0.0;
    for (int i = 0; i < 200; ++i) {
      const int s = rng.integer(0, 4);
      const int r = rng.integer(0, s);
      if (phq(random_phq(rng, r, s), 0.0, 1e-15).value != Cplx(1.0)) bad += 1.0;
    }
    return bad;
  });
  run.upper("series coefficients match direct Pochhammer ratios, k <= 30", 1e-12, [&] {
    Worst w;
    for (int i = 0; i < 20; ++i) {
      const int s = rng.integer(1, 4);
      const auto p = random_phq(rng, rng.integer(0, s), s);
      const auto u = phq_log_series(p, 0.0, 1, 30);
      double fact = 1.0;
      for (int k = 0; k <= 30; ++k) {
        if (k > 0) fact *= k;
        Cplx want = 1.0 / fact;
        for (const auto& a : p.alphas) want *= pochhammer(a, k);
        for (const auto& b : p.betas) want /= pochhammer(b, k);
        w.add(rel(u.terms.at(static_cast<std::size_t>(k)).coeff, want));
      }
    }
    return w.value();
  });
  run.upper("regularized = plain / prod Gamma(beta)", 1e-11, [&] {
    Worst w;
    for (int i = 0; i < 50; ++i) {
      const int s = rng.integer(1, 4);
      const auto p = random_phq(rng, rng.integer(0, s), s);
      const Cplx zeta = rng.box(3.0, 3.0);
      Cplx want = phq(p, zeta, 1e-16).value;
      for (const auto& b : p.betas) want *= recip_gamma(b);
      w.add(rel(phq_regularized(p, zeta, 1e-16).value, want));
    }
    return w.value();
  });
  run.upper("regularized series is continuous at beta = -2", 1e-6, [&] {
    Worst w;
    for (int i = 0; i < 10; ++i) {
      const int s = rng.integer(1, 3);
      auto p = random_phq(rng, rng.integer(0, s), s);
      const Cplx zeta = rng.box(1.0, 1.0);
      auto along = [&](double eps) {
        auto q = p;
        q.betas[0] = -2.0 + eps;
        Cplx v = phq(q, zeta, 1e-16).value;
        for (const auto& b : q.betas) v *= recip_gamma(b);
        return v;
      };
      const Cplx f3 = along(1e-3), f4 = along(1e-4), f5 = along(1e-5);
      const Cplx r1 = (10.0 * f4 - f3) / 9.0;
      const Cplx r2 = (10.0 * f5 - f4) / 9.0;
      const Cplx limit = (100.0 * r2 - r1) / 99.0;
      p.betas[0] = -2.0;
      const Cplx at = phq_regularized(p, zeta, 1e-16).value;
      w.add(std::abs(at - limit) / std::max(1.0, std::abs(at)));
    }
    return w.value();
  });
  run.upper("elementary closed forms (exp, (e^z-1)/z, cosh)", 1e-12, [&] {
    Worst w;
    for (int i = 0; i < 20; ++i) {
      const Cplx z = rng.box(3.0, 3.0);
      w.add(rel(phq({}, z, 1e-17).value, std::exp(z)));
      w.add(rel(phq({{1.0}, {2.0}}, z, 1e-17).value, (std::exp(z) - 1.0) / z));
      w.add(rel(phq({{}, {0.5}}, z * z / 4.0, 1e-17).value, std::cosh(z)));
    }
    return w.value();
  });
  run.upper("fundamental system satisfies the ODE, 50 generic sets", 1e-10, [&] {
    Worst w;
    int used = 0;
    while (used < 50) {
      const int s = rng.integer(1, 4);
      const auto p = random_phq(rng, rng.integer(0, s), s);
      if (!phq_is_generic(p)) continue;
      ++used;
      for (const auto& u : phq_fundamental_system(p)) w.add(hypergeo_ode_residual(p, u) / max_coeff(u));
    }
    return w.value();
  });
}

// --------------------------------------------------------------- meijer --

// Random G^{m,n}_{p,q} with m >= 1, q <= 4 and distinct numerator classes,
// plus a sample point inside the region where its series converges.
struct GInstance {
  GParams g;
  Cplx zeta;
};

GInstance random_g(Rng& rng) {
  for (;;) {
    GInstance in;
    const int q = rng.integer(1, 4);
    const int p = rng.integer(0, q - 1);
    in.g.m = rng.integer(1, q);
    in.g.n = rng.integer(0, p);
    for (int k = 0; k < p; ++k) in.g.a.push_back(rng.box(1.0, 0.5));
    for (int j = 0; j < q; ++j) in.g.b.push_back(rng.box(1.0, 0.5));
    in.zeta = rng.disk(0.1, p == q - 1 ? 0.8 : 2.0);
    try {
      validate(in.g);
    } catch (const Error&) {
      continue;
    }
    if (has_distinct_classes(in.g)) return in;
  }
}

double distance_to_integer(Cplx d) { return std::abs(d - std::round(d.real())); }

// b-vectors with deliberate coincidences: equal entries, integer shifts and
// triple classes. The remaining entries stay 0.05 away from an integer
// difference with any other entry; closer near-coincidences make the
// solutions nearly dependent, which is a conditioning effect rather than a
// property of the construction.
std::vector<Cplx> random_coincident_b(Rng& rng, int index) {
  const int q = 2 + index % 3;
  std::vector<Cplx> b;
  while (static_cast<int>(b.size()) < q) {
    const Cplx c = rng.box(1.0, 0.5);
    if (std::all_of(b.begin(), b.end(), [&](Cplx x) { return distance_to_integer(c - x) >= 0.05; }))
      b.push_back(c);
  }
  switch (index % 5) {
    case 1: b[1] = b[0]; break;
    case 2: b[1] = b[0] + 1.0; break;
    case 3:
      b[1] = b[0];
      if (q >= 3) b[2] = b[0];
      break;
    case 4:
      b[1] = b[0] - 2.0;
      if (q >= 3) b[2] = b[0] + 1.0;
      break;
    default: break;
  }
  return b;
}

int largest_class(const std::vector<Cplx>& b) {
  int best = 0;
  for (const auto& x : b) {
    int n = 0;
    for (const auto& y : b)
      if (is_near_integer(x - y)) ++n;
    best = std::max(best, n);
  }
  return best;
}

void suite_meijer(Rng& rng, Runner& run) {
  run.upper("congruence partition is sound", 0.0, [&] {
    double bad = 0.0;
    for (int i = 0; i < 30; ++i) {
      const auto b = random_coincident_b(rng, i);
      const auto parts = congruence_partition(b);
      std::vector<int> seen(b.size(), 0);
      for (std::size_t c = 0; c < parts.classes.size(); ++c) {
        for (const auto& m : parts.classes[c]) {
          ++seen[static_cast<std::size_t>(m.index)];
          if (!is_near_integer(m.value - parts.classes[c].front().value)) bad += 1.0;
        }
        for (std::size_t d = c + 1; d < parts.classes.size(); ++d)
          if (is_near_integer(parts.classes[c].front().value - parts.classes[d].front().value)) bad += 1.0;
      }
      for (int s : seen)
        if (s != 1) bad += 1.0;
    }
    return bad;
  });
  run.upper("generic expansion = residue sum, 50 instances", 1e-9, [&] {
    Worst w;
    for (int i = 0; i < 50; ++i) {
      const auto in = random_g(rng);
      w.add(rel(meijer_g_generic(in.g, in.zeta, 1e-16).value, meijer_g_residue_sum(in.g, in.zeta, 1e-16).value));
    }
    return w.value();
  });
  run.upper("m = 0 gives exactly 0", 0.0, [&] {
    double bad = 0.0;
    for (int i = 0; i < 20; ++i) {
      auto in = random_g(rng);
      in.g.m = 0;
      if (meijer_g_residue_sum(in.g, in.zeta, 1e-15).value != Cplx{}) bad += 1.0;
    }
    return bad;
  });
  run.upper("expansion into G^{1,p} functions, 20 instances", 1e-9, [&] {
    Worst w;
    for (int i = 0; i < 20; ++i) {
      const auto in = random_g(rng);
      w.add(g1p_identity_check(in.g, in.zeta));
    }
    return w.value();
  });
  run.upper("generic fundamental system satisfies the ODE", 1e-10, [&] {
    Worst w;
    for (int i = 0; i < 20; ++i) {
      const auto in = random_g(rng);
      for (const auto& u : meijer_fundamental_system_generic(in.g))
        w.add(meijer_general_ode_residual(in.g, u) / max_coeff(u));
    }
    return w.value();
  });

  std::vector<std::vector<Cplx>> bs;
  for (int i = 0; i < 30; ++i) bs.push_back(random_coincident_b(rng, i));
  run.upper("log-power system satisfies the ODE, 30 b-vectors", 1e-10, [&] {
    Worst w;
    for (const auto& b : bs)
      for (const auto& u : fundamental_system_0q(b)) w.add(meijer_ode_residual(b, u) / max_coeff(u));
    return w.value();
  });
  run.lower("log-power system is independent (normalized Wronskian)", 1e-8, [&] {
    Worst w(true);
    for (const auto& b : bs) w.add(generalized_wronskian(fundamental_system_0q(b), 0.7).normalized);
    return w.value();
  });
  run.upper("largest log power = largest class size - 1", 0.0, [&] {
    double bad = 0.0;
    for (const auto& b : bs) {
      int top = 0;
      for (const auto& u : fundamental_system_0q(b)) top = std::max(top, max_log_power(u));
      if (top != largest_class(b) - 1) bad += 1.0;
    }
    return bad;
  });
}

// ---------------------------------------------------------------- euler --

void suite_euler(Rng& rng, Runner& run) {
  run.upper("N = 1 closed form (-mu z)^lambda e^(mu z), 20 pts", 1e-12, [&] {
    Worst w;
    for (int i = 0; i < 20; ++i) {
      const EulerProblem pr{1, {rng.box(2.0, 2.0)}, rng.disk(0.1, 1.5)};
      const Cplx z = rng.disk(0.1, 1.5);
      const auto sys = euler_fundamental_system(pr);
      const Cplx want = std::exp(pr.lambdas[0] * std::log(-pr.mu * z)) * std::exp(pr.mu * z);
      w.add(rel(euler_eval(sys.at(0), z), want));
    }
    return w.value();
  });
  run.upper("N = 2 generic solutions are modified Bessel I, 10 pts", 1e-9, [&] {
    Worst w;
    int used = 0;
    while (used < 10) {
      const EulerProblem pr{2, {rng.box(2.0, 1.0), rng.box(2.0, 1.0)}, rng.disk(0.2, 2.0)};
      const Cplx nu = (pr.lambdas[0] - pr.lambdas[1]) / 2.0;
      if (std::abs(nu - std::round(nu.real())) < 0.1) continue;
      ++used;
      const Cplx z = rng.disk(0.2, 2.0);
      const Cplx zeta = euler_zeta(pr, z);
      const Cplx x = 2.0 * std::sqrt(zeta);
      const Cplx pref = std::exp((pr.lambdas[0] + pr.lambdas[1]) / 4.0 * std::log(zeta));
      const auto sys = euler_fundamental_system(pr);
      w.add(rel(euler_eval(sys.at(0), z), pref * bessel_i_oracle(nu, x)));
      w.add(rel(euler_eval(sys.at(1), z), pref * bessel_i_oracle(-nu, x)));
    }
    return w.value();
  });
  run.upper("half-integer order reduces to sinh/cosh", 1e-12, [&] {
    Worst w;
    for (int i = 0; i < 10; ++i) {
      const EulerProblem pr{2, {1.0, 0.0}, rng.disk(0.2, 2.0)};
      const Cplx z = rng.disk(0.2, 2.0);
      const Cplx x = 2.0 * std::sqrt(euler_zeta(pr, z));
      const auto sys = euler_fundamental_system(pr);
      w.add(rel(euler_eval(sys.at(0), z), std::sinh(x) / std::sqrt(kPi)));
      w.add(rel(euler_eval(sys.at(1), z), std::cosh(x) / std::sqrt(kPi)));
    }
    return w.value();
  });
  run.upper("N = 2, even integer gap: log solution is 2 (x/2)^s K_nu(x)", 1e-7, [&] {
    Worst w;
    for (int i = 0; i < 5; ++i) {
      const Cplx l2 = rng.box(1.0, 0.5);
      const Cplx l1 = l2 + 2.0 * static_cast<double>(i % 3);
      const Cplx mu = rng.disk(0.2, 2.0);
      // Sample x = sqrt(mu) z in the right half plane, |x| <= 3.
      Cplx x = rng.disk(0.3, 3.0);
      if (x.real() < 0.0) x = -x;
      const Cplx z = x / std::sqrt(mu);
      const EulerProblem pr{2, {l1, l2}, mu};
      const auto sys = euler_fundamental_system(pr);
      const Cplx want = 2.0 * std::exp((l1 + l2) / 2.0 * std::log(x / 2.0)) * bessel_k_oracle((l1 - l2) / 2.0, x);
      w.add(rel(euler_eval(sys.at(1), z), want));
    }
    return w.value();
  });

  std::vector<EulerProblem> problems;
  for (int i = 0; i < 10; ++i) {
    EulerProblem pr;
    pr.order = 1 + i % 4;
    for (int j = 0; j < pr.order; ++j) pr.lambdas.push_back(rng.box(2.0, 1.0));
    if (pr.order >= 2 && i % 2 == 1) pr.lambdas[1] = pr.lambdas[0] + static_cast<double>(pr.order);
    pr.mu = rng.disk(0.2, 1.5);
    problems.push_back(std::move(pr));
  }
  run.upper("Euler operator reproduces mu y (symbolic theta in zeta)", 1e-9, [&] {
    Worst w;
    for (const auto& pr : problems) {
      const double n = pr.order;
      for (const auto& sol : euler_fundamental_system(pr)) {
        // z d/dz = N zeta d/dzeta, so prod (z d/dz - lambda_j) = N^N prod (theta - lambda_j/N).
        LogPowerSeries lhs = sol.series;
        for (const auto& l : pr.lambdas) lhs = series_scale(theta_plus(lhs, -l / n), n);
        const Cplx z = rng.disk(0.2, 1.5);
        const Cplx y = euler_eval(sol, z);
        Cplx zn = 1.0;
        for (int k = 0; k < pr.order; ++k) zn *= z;
        w.add(rel(evaluate(lhs, euler_zeta(pr, z)), pr.mu * zn * y));
      }
    }
    return w.value();
  });
  run.upper("series residual of every solution", 1e-10, [&] {
    Worst w;
    for (const auto& pr : problems)
      for (const auto& sol : euler_fundamental_system(pr)) w.add(euler_residual(pr, sol));
    return w.value();
  });
  run.lower("N solutions with nonzero normalized Wronskian", 1e-8, [&] {
    Worst w(true);
    for (const auto& pr : problems) {
      const auto sys = euler_fundamental_system(pr);
      if (static_cast<int>(sys.size()) != pr.order) return 0.0;
      std::vector<LogPowerSeries> ys;
      for (const auto& s : sys) ys.push_back(s.series);
      w.add(generalized_wronskian(ys, 0.7).normalized);
    }
    return w.value();
  });
}

// -------------------------------------------------------------- nonhomo --

std::vector<Cplx> random_lambdas(Rng& rng, int n, double lo, double hi) {
  std::vector<Cplx> l;
  for (int j = 0; j < n; ++j) l.push_back(rng.uniform(lo, hi));
  return l;
}

Cplx derivative_of_indicial(const std::vector<Cplx>& lambdas, Cplx x) {
  Cplx d = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    Cplx p = 1.0;
    for (std::size_t j = 0; j < lambdas.size(); ++j)
      if (j != i) p *= x - lambdas[j];
    d += p;
  }
  return d;
}

// Size of z^{-N} z^x (ln z)^m without the cancellations of its value: the
// finite-difference error of the operator scales with this, not with
// |y(z)|, which vanishes where ln z does.
double fd_scale(Cplx x, int m, Cplx z, std::size_t n) {
  return std::abs(std::exp(x * std::log(z))) * std::pow(std::max(1.0, std::abs(std::log(z))), m) *
         std::pow(std::abs(z), -static_cast<double>(n));
}

void suite_nonhomo(Rng& rng, Runner& run) {
  run.upper("homogeneous basis has N members", 0.0, [&] {
    double bad = 0.0;
    for (int i = 0; i < 20; ++i) {
      const int n = rng.integer(1, 5);
      auto l = random_lambdas(rng, n, -2.0, 2.0);
      if (n >= 2 && i % 2 == 0) l[1] = l[0];
      if (n >= 3 && i % 4 == 0) l[2] = l[0];
      if (static_cast<int>(homogeneous_basis(l).size()) != n) bad += 1.0;
    }
    return bad;
  });
  run.upper("operator on z^lambda and z^lambda ln z (symbolic)", 1e-12, [&] {
    Worst w;
    for (int i = 0; i < 20; ++i) {
      std::vector<Cplx> l;
      for (int j = 0; j < 1 + i % 4; ++j) l.push_back(rng.box(2.0, 1.0));
      const Cplx x = rng.box(2.0, 1.0);
      LogPowerSeries u{{{x, 0, 1.0}}, 1, 1};
      LogPowerSeries v{{{x, 1, 1.0}}, 1, 1};
      for (const auto& lj : l) {
        u = theta_plus(u, -lj);
        v = theta_plus(v, -lj);
      }
      const Cplx p = indicial_polynomial(l, x);
      const Cplx dp = derivative_of_indicial(l, x);
      w.add(rel(u.terms.at(0).coeff, p));
      for (const auto& t : v.terms) w.add(rel(t.coeff, t.log_power == 1 ? p : dp));
    }
    return w.value();
  });
  run.upper("operator on z^lambda ln z (finite differences), 10 pts", 1e-6, [&] {
    Worst w;
    for (int i = 0; i < 10; ++i) {
      const auto l = random_lambdas(rng, 1 + i % 3, -1.0, 1.0);
      const Cplx x = rng.uniform(-1.0, 1.0);
      const Cplx p = indicial_polynomial(l, x);
      const Cplx dp = derivative_of_indicial(l, x);
      const RhsFunction y = [x](Cplx z) { return std::exp(x * std::log(z)) * std::log(z); };
      const RhsFunction f = [=](Cplx z) { return (dp + p * std::log(z)) * std::exp(x * std::log(z)); };
      Cplx z = rng.disk(0.5, 2.0);
      if (z.real() < 0.0) z = -z;
      w.add(nonhomo_residual(l, y, f, z) / fd_scale(x, 1, z, l.size()));
    }
    return w.value();
  });
  run.upper("polynomial right-hand side, N <= 3", 1e-8, [&] {
    Worst w;
    for (int i = 0; i < 6; ++i) {
      const auto l = random_lambdas(rng, 1 + i % 3, -2.5, -0.2);
      std::vector<Cplx> c;
      for (int k = 0; k <= 3; ++k) c.push_back(rng.box(1.0, 1.0));
      const RhsFunction f = [c](Cplx z) { return c[0] + z * (c[1] + z * (c[2] + z * c[3])); };
      Cplx z = rng.disk(0.5, 2.0);
      if (z.real() < 0.0) z = -z;
      Cplx want = 0.0;
      Cplx zk = 1.0;
      for (int k = 0; k <= 3; ++k) {
        want += c[static_cast<std::size_t>(k)] * zk / indicial_polynomial(l, static_cast<double>(k));
        zk *= z;
      }
      w.add(rel(particular_solution(l, f, z), want));
    }
    return w.value();
  });
  run.upper("superposition of right-hand sides", 1e-8, [&] {
    Worst w;
    for (int i = 0; i < 3; ++i) {
      const auto l = random_lambdas(rng, 1 + i, -2.0, -0.3);
      const RhsFunction f1 = [](Cplx z) { return z * z + 1.0; };
      const RhsFunction f2 = [](Cplx z) { return std::sin(z) + 2.0 * std::exp(z); };
      const RhsFunction f12 = [&](Cplx z) { return f1(z) + f2(z); };
      const Cplx z = rng.disk(0.5, 1.5);
      w.add(rel(particular_solution(l, f12, z), particular_solution(l, f1, z) + particular_solution(l, f2, z)));
    }
    return w.value();
  });
  run.upper("homogeneous basis residual by finite differences", 1e-6, [&] {
    Worst w;
    const RhsFunction zero = [](Cplx) { return Cplx{}; };
    for (int i = 0; i < 6; ++i) {
      auto l = random_lambdas(rng, 1 + i % 3, -1.5, 1.5);
      if (l.size() >= 2 && i % 2 == 1) l[1] = l[0];
      Cplx z = rng.disk(0.5, 2.0);
      if (z.real() < 0.0) z = -z;
      for (const auto& e : homogeneous_basis(l)) {
        const RhsFunction y = [e](Cplx s) { return eval_basis(e, s); };
        w.add(nonhomo_residual(l, y, zero, z) / fd_scale(e.exponent, e.log_power, z, l.size()));
      }
    }
    return w.value();
  });
}

using SuiteFn = void (*)(Rng&, Runner&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"gamma", suite_gamma},   {"jets", suite_jets},   {"hypergeo", suite_hypergeo},
    {"meijer", suite_meijer}, {"euler", suite_euler}, {"nonhomo", suite_nonhomo},
};

}  // namespace

bool VerifyOutcome::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : kSuites) n.emplace_back(s.name);
    n.emplace_back("all");
    return n;
  }();
  return names;
}

bool is_verify_suite(const std::string& name) {
  const auto& n = verify_suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

VerifyOutcome run_verify(const std::string& suite, std::uint64_t seed) {
  if (!is_verify_suite(suite)) throw Error(ErrorKind::Parse, "unknown verification suite '" + suite + "'");
  VerifyOutcome out;
  std::uint64_t index = 0;
  for (const auto& s : kSuites) {
    ++index;
    if (suite != "all" && suite != s.name) continue;
    // Each suite draws from its own stream so that "all" reproduces the
    // individual runs exactly.
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + index);
    Runner run(s.name, out);
    s.fn(rng, run);
  }
  return out;
}

void print_verify(const VerifyOutcome& outcome, std::ostream& out) {
  char line[512];
  int passed = 0;
  for (const auto& c : outcome.checks) {
    if (c.pass) ++passed;
    std::snprintf(line, sizeof line, "%-9s %-4s %-62s %-8s %.3e %s %.1e", c.suite.c_str(), c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.lower_bound ? "min" : "max", c.worst, c.lower_bound ? ">" : "<=", c.limit);
    out << line;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << '\n';
  }
  out << passed << "/" << outcome.checks.size() << " checks passed\n";
}

}  // namespace eulerg
