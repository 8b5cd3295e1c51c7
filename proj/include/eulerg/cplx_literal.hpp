#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulerg/error.hpp"

namespace eulerg {

/// Parses "RE", "RE+IMi", "RE-IMi" or "IMi" (decimal reals, optional
/// exponents, no locale). A bare "i" or "-i" is the imaginary unit.
/// Throws Error(Parse).
Cplx parse_cplx(std::string_view text);

/// Comma separated literals; the empty (or all-blank) string is the empty
/// list.
std::vector<Cplx> parse_cplx_list(std::string_view text);

/// 17 significant digits, enough to parse back to the same double.
std::string format_double(double v);

/// Inverse of parse_cplx for finite values: "RE+IMi" / "RE-IMi".
std::string format_cplx(Cplx z);

struct GridSpec {
  Cplx start{};
  Cplx stop{};
  int count = 0;
};

/// "start:stop:count" with complex endpoints and count >= 1.
GridSpec parse_grid(std::string_view text);

/// count points on the straight segment from start to stop, endpoints
/// included (a single point is `start`).
std::vector<Cplx> linspace(const GridSpec& grid);

}  // namespace eulerg
