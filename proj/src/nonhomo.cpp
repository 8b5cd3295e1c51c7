#include "eulerg/nonhomo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eulerg/quadrature.hpp"

namespace eulerg {

MultiplicityGroups group_multiplicities(const std::vector<Cplx>& lambdas) {
  MultiplicityGroups out;
  for (const auto& l : lambdas) {
    require_finite(l, "lambda");
    bool found = false;
    for (auto& g : out.groups) {
      if (std::abs(g.value - l) <= 1e-9) {
        ++g.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) out.groups.push_back({l, 1});
  }
  return out;
}

Cplx indicial_polynomial(const std::vector<Cplx>& lambdas, Cplx lambda) {
  Cplx p = 1.0;
  for (const auto& l : lambdas) p *= lambda - l;
  return p;
}

std::vector<BasisElement> homogeneous_basis(const std::vector<Cplx>& lambdas) {
  std::vector<BasisElement> out;
  for (const auto& g : group_multiplicities(lambdas).groups)
    for (int k = 0; k < g.multiplicity; ++k) out.push_back({g.value, k});
  return out;
}

Cplx eval_basis(const BasisElement& e, Cplx z) {
  if (z == Cplx{}) throw Error(ErrorKind::ZeroPoint, "basis element evaluated at z = 0");
  const Cplx lz = std::log(z);
  Cplx v = std::exp(e.exponent * lz);
  for (int k = 0; k < e.log_power; ++k) v *= lz;
  return v;
}

double probe_leading_exponent(const RhsFunction& f, Cplx z) {
  const double v4 = std::abs(f(z * 1e-4));
  const double v6 = std::abs(f(z * 1e-6));
  const double v8 = std::abs(f(z * 1e-8));
  double slope;
  if (v6 > 0.0 && v8 > 0.0)
    slope = std::log(v6 / v8) / std::log(100.0);
  else if (v4 > 0.0 && v6 > 0.0)
    slope = std::log(v4 / v6) / std::log(100.0);
  else
    return std::numeric_limits<double>::infinity();
  // Polynomial-like data land within roundoff of an integer.
  if (std::abs(slope - std::round(slope)) < 1e-4) slope = std::round(slope);
  return slope;
}

namespace {

constexpr double kGradedPower = 8.0;

struct Nested {
  const std::vector<Cplx>& lambdas;
  const RhsFunction& f;
  const QuadratureConfig& quad;
  std::vector<double> kappa;
  std::vector<double> beta;  // leading exponent of the level-j integrand in s, plus one

  // u_j(w); u_N = f.
  QuadResult level(std::size_t j, Cplx w) const {
    if (j == lambdas.size()) return {f(w), 0.0, 0};
    const double k = kappa[j];
    const double decay = k * beta[j] - 1.0;
    // ds = k t^{k-1} dt folded into one exponent with s^{-lambda-1}.
    const Cplx weight_exp = k * (-lambdas[j] - 1.0) + (k - 1.0);
    auto integrand = [&, j, w, k, decay, weight_exp](double t) -> Cplx {
      const double log_t = std::log(t);
      // The integrand is O(t^decay): below the smallest double it is zero,
      // and evaluating its factors separately would give inf * 0.
      if (decay * log_t < -745.0) return {};
      const double s = std::exp(k * log_t);
      const Cplx inner = level(j + 1, w * s).value;
      return inner * (k * std::exp(weight_exp * log_t));
    };
    return integrate_gk(integrand, 0.0, 1.0, quad.rel_tol, 0.0, quad.max_subdivisions);
  }
};

}  // namespace

ParticularReport particular_solution_report(const std::vector<Cplx>& lambdas, const RhsFunction& f, Cplx z,
                                            const QuadratureConfig& quad) {
  require_finite(z, "z");
  if (z == Cplx{}) throw Error(ErrorKind::ZeroPoint, "particular solution at z = 0");
  if (lambdas.empty()) return {f(z), 0.0, 0};
  for (const auto& l : lambdas) require_finite(l, "lambda");

  const double alpha = probe_leading_exponent(f, z);
  if (std::isinf(alpha)) return {};  // f vanishes identically near 0

  Nested nest{lambdas, f, quad, {}, {}};
  for (const auto& l : lambdas) {
    const double beta = alpha - l.real();
    if (beta <= 0.0)
      throw Error(ErrorKind::NonIntegrableAtOrigin,
                  "integrand behaves like s^" + std::to_string(beta - 1.0) + " at the origin");
    // s = t^kappa turns s^{beta-1} into t^{kappa beta - 1}. Aiming for a
    // high power rather than the nearest integer matters: with complex
    // lambda the integrand also oscillates in ln t, and a high-order zero at
    // the endpoint keeps each level from subdividing toward 0, which would
    // otherwise compound multiplicatively across the nested levels.
    nest.kappa.push_back(quad.grading > 0.0 ? quad.grading : std::max(std::ceil(beta), kGradedPower) / beta);
    nest.beta.push_back(beta);
  }
  const QuadResult r = nest.level(0, z);
  require_finite(r.value, "particular solution");
  return {r.value, r.est_error, r.subdivisions};
}

Cplx particular_solution(const std::vector<Cplx>& lambdas, const RhsFunction& f, Cplx z,
                         const QuadratureConfig& quad) {
  return particular_solution_report(lambdas, f, z, quad).value;
}

ParticularReport general_solution(const std::vector<Cplx>& lambdas, const RhsFunction& f, Cplx z,
                                  const std::vector<Cplx>& homog_coeffs, const QuadratureConfig& quad) {
  const auto basis = homogeneous_basis(lambdas);
  if (homog_coeffs.size() > basis.size())
    throw Error(ErrorKind::InvalidParams, "more homogeneous coefficients than basis elements (" +
                                              std::to_string(basis.size()) + ")");
  ParticularReport r = particular_solution_report(lambdas, f, z, quad);
  for (std::size_t i = 0; i < homog_coeffs.size(); ++i)
    if (homog_coeffs[i] != Cplx{}) r.value += homog_coeffs[i] * eval_basis(basis[i], z);
  return r;
}

double nonhomo_residual(const std::vector<Cplx>& lambdas, const RhsFunction& y, const RhsFunction& f, Cplx z) {
  const double h = 1e-3 * std::abs(z);
  RhsFunction g = y;
  for (const auto& l : lambdas) {
    RhsFunction prev = g;
    g = [prev, l, h](Cplx w) {
      const Cplx d = (-prev(w + 2.0 * h) + 8.0 * prev(w + h) - 8.0 * prev(w - h) + prev(w - 2.0 * h)) / (12.0 * h);
      return w * d - l * prev(w);
    };
  }
  Cplx zn = 1.0;
  for (std::size_t k = 0; k < lambdas.size(); ++k) zn *= z;
  return std::abs((g(z) - f(z)) / zn);
}

}  // namespace eulerg
