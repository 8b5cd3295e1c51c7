#pragma once

#include <string>
#include <vector>

#include "eulerg/error.hpp"
#include "eulerg/hypergeo.hpp"
#include "eulerg/log_series.hpp"

namespace eulerg {

/// tau_N(lambda) y = mu y with tau_N = z^{-N} prod_j (z d/dz - lambda_j).
struct EulerProblem {
  int order = 1;
  std::vector<Cplx> lambdas;
  Cplx mu{};
};

/// One member of a fundamental system, stored as a series in zeta.
struct EulerSolution {
  LogPowerSeries series;
  EulerProblem problem;
};

struct MeijerMap {
  std::vector<Cplx> b;
  std::string description;
};

void validate(const EulerProblem& problem);

/// b_j = lambda_j / N; the map zeta = mu (z/N)^N turns the problem into
/// [prod(theta - b_j) - zeta] eta = 0.
MeijerMap euler_to_meijer(const EulerProblem& problem);

/// zeta = mu (z/N)^N, with the N-th power taken by repeated multiplication.
Cplx euler_zeta(const EulerProblem& problem, Cplx z);

/// True when no two lambda_j / N differ by an integer.
bool euler_is_generic(const EulerProblem& problem);

/// N solutions with offsets 0..trunc in each series.
///
/// N = 1 gives (-mu z)^{lambda_1} e^{mu z}. For N >= 2 with integer-free
/// differences the solutions are zeta^{b_j} 0F_{N-1}(...|zeta) / prod Gamma;
/// otherwise the log-power construction over congruence classes is used.
std::vector<EulerSolution> euler_fundamental_system(const EulerProblem& problem, int trunc = kDefaultTrunc);

/// Value of a solution at z. Throws DegenerateSpectralParameter for mu = 0
/// and ZeroPoint for z = 0.
Cplx euler_eval(const EulerSolution& solution, Cplx z);

/// meijer_ode_residual with b = lambda / N, relative to the largest series
/// coefficient (0 for the zero series).
double euler_residual(const EulerProblem& problem, const EulerSolution& solution);

/// I_nu(x) = (x/2)^nu 0F1~(; nu + 1; x^2 / 4), regularized series.
Cplx bessel_i_oracle(Cplx nu, Cplx x);

/// K_nu(x) from the I_{+-nu} connection formula; at integer nu the limit is
/// taken by Richardson extrapolation of symmetric offsets 1e-3 and 1e-4.
Cplx bessel_k_oracle(Cplx nu, Cplx x);

}  // namespace eulerg
