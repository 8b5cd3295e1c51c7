#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "eulerg/error.hpp"

namespace eulerg {

/// Number of worker threads evaluate_grid may use (1 without OpenMP).
int grid_threads();

/// Reference loop: f applied to each point in order.
template <class R, class F>
std::vector<R> evaluate_grid_serial(const std::vector<Cplx>& points, F&& f) {
  std::vector<R> out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(f(z));
  return out;
}

/// Same results as evaluate_grid_serial, with points distributed over
/// threads. f must be pure. If any point throws, the exception of the
/// lowest-index failing point is rethrown after all points finish, so the
/// error seen by the caller does not depend on scheduling.
template <class R, class F>
std::vector<R> evaluate_grid(const std::vector<Cplx>& points, F&& f) {
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<R> out(points.size());
  std::vector<std::exception_ptr> errors(points.size());
#if defined(EULERG_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(points[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace eulerg
