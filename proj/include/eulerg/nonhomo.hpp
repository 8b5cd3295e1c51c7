#pragma once

#include <functional>
#include <vector>

#include "eulerg/error.hpp"

namespace eulerg {

/// Right-hand side f of z^{-N} prod(theta - lambda_j) y = z^{-N} f.
using RhsFunction = std::function<Cplx(Cplx)>;

struct MultiplicityGroup {
  Cplx value{};
  int multiplicity = 0;
};

struct MultiplicityGroups {
  std::vector<MultiplicityGroup> groups;
};

/// Distinct roots (equality tolerance 1e-9) in order of first occurrence.
MultiplicityGroups group_multiplicities(const std::vector<Cplx>& lambdas);

/// P_N(lambda) = prod_j (lambda - lambda_j).
Cplx indicial_polynomial(const std::vector<Cplx>& lambdas, Cplx lambda);

/// z^exponent (ln z)^log_power.
struct BasisElement {
  Cplx exponent{};
  int log_power = 0;
};

/// The N homogeneous solutions, grouped by root, log powers ascending.
std::vector<BasisElement> homogeneous_basis(const std::vector<Cplx>& lambdas);

/// Principal-branch value of a basis element.
Cplx eval_basis(const BasisElement& e, Cplx z);

struct QuadratureConfig {
  double rel_tol = 1e-9;
  int max_subdivisions = 200;
  /// Exponent kappa of the substitution s = t^kappa; 0 selects it from the
  /// probed behavior of the integrand at the origin.
  double grading = 0.0;
};

struct ParticularReport {
  Cplx value{};
  double est_error = 0.0;
  int subdivisions = 0;
};

/// Particular solution through the nested integrals
///   u_j(w) = int_0^1 u_{j+1}(w s) s^{-lambda_j - 1} ds,  u_{N+1} = f,
/// evaluated at z (the result is u_1(z)). Throws NonIntegrableAtOrigin when a
/// level diverges at 0 and QuadratureFailure when the tolerance is not met.
ParticularReport particular_solution_report(const std::vector<Cplx>& lambdas, const RhsFunction& f, Cplx z,
                                            const QuadratureConfig& quad = {});

Cplx particular_solution(const std::vector<Cplx>& lambdas, const RhsFunction& f, Cplx z,
                         const QuadratureConfig& quad = {});

/// Particular solution plus sum C_i * basis_i (coefficients in basis order).
ParticularReport general_solution(const std::vector<Cplx>& lambdas, const RhsFunction& f, Cplx z,
                                  const std::vector<Cplx>& homog_coeffs, const QuadratureConfig& quad = {});

/// Estimated leading exponent of f at 0 along the ray through z, from the
/// log-log slope at s = 1e-6, 1e-8. Returns +infinity when f vanishes there.
double probe_leading_exponent(const RhsFunction& f, Cplx z);

/// |z^{-N} prod(theta - lambda_j) y(z) - z^{-N} f(z)| with theta applied by
/// fourth-order central differences, step 1e-3 |z|.
double nonhomo_residual(const std::vector<Cplx>& lambdas, const RhsFunction& y, const RhsFunction& f, Cplx z);

}  // namespace eulerg
