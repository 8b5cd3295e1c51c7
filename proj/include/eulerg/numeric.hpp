#pragma once

#include <cmath>

#include "eulerg/error.hpp"

namespace eulerg {

/// Two parameters whose difference lies within this distance of an integer
/// are treated as differing by exactly that integer.
inline constexpr double kIntegerTolerance = 1e-9;

inline bool is_near_integer(Cplx z, double tol = kIntegerTolerance) {
  return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

inline long nearest_integer(Cplx z) { return std::lround(z.real()); }

}  // namespace eulerg
