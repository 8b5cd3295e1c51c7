#include "eulerg/euler.hpp"

#include <cmath>
#include <numbers>

#include "eulerg/meijer.hpp"
#include "eulerg/numeric.hpp"
#include "eulerg/scalar_gamma.hpp"

namespace eulerg {

void validate(const EulerProblem& problem) {
  if (problem.order < 1) throw Error(ErrorKind::InvalidParams, "order N must be at least 1");
  if (static_cast<int>(problem.lambdas.size()) != problem.order)
    throw Error(ErrorKind::InvalidParams, "need exactly N lambdas");
  for (const auto& l : problem.lambdas) require_finite(l, "lambda");
  require_finite(problem.mu, "mu");
}

MeijerMap euler_to_meijer(const EulerProblem& problem) {
  validate(problem);
  MeijerMap map;
  const double n = problem.order;
  for (const auto& l : problem.lambdas) map.b.push_back(l / n);
  map.description = "zeta = mu * (z/" + std::to_string(problem.order) + ")^" + std::to_string(problem.order) +
                    ", b_j = lambda_j/" + std::to_string(problem.order);
  return map;
}

Cplx euler_zeta(const EulerProblem& problem, Cplx z) {
  const Cplx w = z / static_cast<double>(problem.order);
  Cplx p = 1.0;
  for (int k = 0; k < problem.order; ++k) p *= w;
  return problem.mu * p;
}

bool euler_is_generic(const EulerProblem& problem) {
  const auto b = euler_to_meijer(problem).b;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (is_near_integer(b[i] - b[j])) return false;
  return true;
}

std::vector<EulerSolution> euler_fundamental_system(const EulerProblem& problem, int trunc) {
  const auto b = euler_to_meijer(problem).b;
  std::vector<LogPowerSeries> series;
  if (problem.order == 1) {
    // G^{1,0}_{0,1}(b | -zeta) = (-zeta)^b e^{zeta}
    series.push_back(g_m0_log_series(b, 1, trunc));
  } else if (euler_is_generic(problem)) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      PhqParams h;
      Cplx scale = 1.0;
      for (std::size_t jj = 0; jj < b.size(); ++jj) {
        if (jj == j) continue;
        h.betas.push_back(1.0 + b[j] - b[jj]);
        scale *= recip_gamma(1.0 + b[j] - b[jj]);
      }
      series.push_back(phq_log_series(h, b[j], 1, trunc, scale));
    }
  } else {
    series = fundamental_system_0q(b, trunc);
  }
  std::vector<EulerSolution> out;
  out.reserve(series.size());
  for (auto& s : series) out.push_back({std::move(s), problem});
  return out;
}

Cplx euler_eval(const EulerSolution& solution, Cplx z) {
  require_finite(z, "z");
  if (solution.problem.mu == Cplx{})
    throw Error(ErrorKind::DegenerateSpectralParameter, "mu = 0 collapses the substitution");
  if (z == Cplx{}) throw Error(ErrorKind::ZeroPoint, "solutions are not evaluated at z = 0");
  return evaluate(solution.series, euler_zeta(solution.problem, z));
}

double euler_residual(const EulerProblem& problem, const EulerSolution& solution) {
  const auto b = euler_to_meijer(problem).b;
  const double r = meijer_ode_residual(b, solution.series);
  const double scale = max_coeff(solution.series);
  return scale > 0.0 ? r / scale : r;
}

Cplx bessel_i_oracle(Cplx nu, Cplx x) {
  require_finite(nu, "nu");
  require_finite(x, "x");
  if (x == Cplx{}) throw Error(ErrorKind::ZeroPoint, "Bessel oracle at x = 0");
  const Cplx half = x / 2.0;
  const auto s = phq_regularized({{}, {nu + 1.0}}, half * half, 1e-17);
  return std::exp(nu * std::log(half)) * s.value;
}

namespace {

Cplx bessel_k_noninteger(Cplx nu, Cplx x) {
  return std::numbers::pi / (2.0 * sin_pi(nu)) * (bessel_i_oracle(-nu, x) - bessel_i_oracle(nu, x));
}

}  // namespace

Cplx bessel_k_oracle(Cplx nu, Cplx x) {
  if (!is_near_integer(nu)) return bessel_k_noninteger(nu, x);
  const double n = static_cast<double>(nearest_integer(nu));
  auto symmetric = [&](double eps) {
    return 0.5 * (bessel_k_noninteger(n + eps, x) + bessel_k_noninteger(n - eps, x));
  };
  // The symmetric mean is even in eps, so one Richardson step removes eps^2.
  const Cplx coarse = symmetric(1e-3);
  const Cplx fine = symmetric(1e-4);
  return (100.0 * fine - coarse) / 99.0;
}

}  // namespace eulerg
