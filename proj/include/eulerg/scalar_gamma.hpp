#pragma once

#include "eulerg/error.hpp"

namespace eulerg {

/// Absolute distance below which an argument counts as a nonpositive
/// integer (a pole of the gamma function).
inline constexpr double kPoleTolerance = 1e-12;

/// If `z` lies within kPoleTolerance of {0, -1, -2, ...} returns that
/// integer's magnitude n (z ~ -n), otherwise -1.
int nonpositive_integer_index(Cplx z);

/// Principal branch of ln Gamma(z), continuous on C minus (-inf, 0].
/// Throws PoleOfGamma at nonpositive integers.
Cplx log_gamma(Cplx z);

/// Gamma(z); throws PoleOfGamma at nonpositive integers.
Cplx gamma(Cplx z);

/// 1/Gamma(z), entire; exactly zero at nonpositive integers.
Cplx recip_gamma(Cplx z);

/// Rising factorial (g)_k.
Cplx pochhammer(Cplx g, int k);

/// psi^(order)(z) for 0 <= order <= 16.
Cplx polygamma(int order, Cplx z);

/// sin(pi z) with argument reduction, so integers give exact zeros.
Cplx sin_pi(Cplx z);

}  // namespace eulerg
