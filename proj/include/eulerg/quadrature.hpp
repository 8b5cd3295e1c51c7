#pragma once

#include <functional>

#include "eulerg/error.hpp"

namespace eulerg {

struct QuadResult {
  Cplx value{};
  double est_error = 0.0;
  int subdivisions = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of a complex
/// valued function over [lo, hi]. Intervals with the largest error estimate
/// are bisected until the total estimate drops below
/// max(abs_tol, rel_tol * |integral|); throws QuadratureFailure after
/// `max_subdivisions` bisections.
QuadResult integrate_gk(const std::function<Cplx(double)>& f, double lo, double hi, double rel_tol,
                        double abs_tol, int max_subdivisions);

}  // namespace eulerg
