#pragma once

#include <vector>

#include "eulerg/error.hpp"

namespace eulerg {

/// Truncated Laurent expansion sum_{k=-p}^{K} c_k t^k in t = omega - center.
///
/// `coeffs[i]` holds c_{i - pole_order}. A jet knows its coefficients only up
/// to t^order; arithmetic keeps track of how much of that survives (a product
/// with a pole of order r loses r trailing orders of the other factor).
struct LaurentJet {
  Cplx center{};
  int pole_order = 0;
  int order = 0;
  std::vector<Cplx> coeffs;

  /// c_k, zero outside the stored range below the truncation order.
  Cplx coeff(int k) const;
  /// Lowest and highest stored powers.
  int lowest() const { return -pole_order; }
  int highest() const { return order; }
};

/// Builds a jet from c_{-pole_order}..c_order and normalizes leading zeros.
LaurentJet make_jet(Cplx center, int pole_order, std::vector<Cplx> coeffs);

/// Constant jet `value` (pole order 0).
LaurentJet unit_jet(Cplx value, Cplx center, int order);

/// The jet of t^power (power may be negative).
LaurentJet monomial_jet(Cplx center, int power, int order);

LaurentJet jet_add(const LaurentJet& x, const LaurentJet& y);
LaurentJet jet_scale(const LaurentJet& x, Cplx s);
LaurentJet jet_mul(const LaurentJet& x, const LaurentJet& y);
LaurentJet jet_recip(const LaurentJet& x);

/// Expansion of omega -> Gamma(c - omega) about `center`.
LaurentJet gamma_jet(Cplx c, Cplx center, int order);
/// Expansion of omega -> 1/Gamma(c + omega) about `center`.
LaurentJet recip_gamma_jet(Cplx c, Cplx center, int order);

/// Gamma(c + sign * omega) and its reciprocal for sign = +1 or -1; the two
/// functions above are the special cases the residue calculus needs most.
LaurentJet gamma_affine_jet(Cplx c, int sign, Cplx center, int order);
LaurentJet recip_gamma_affine_jet(Cplx c, int sign, Cplx center, int order);

/// Expansion of omega -> zeta^omega with the principal logarithm.
LaurentJet power_jet(Cplx zeta, Cplx center, int order);
/// Same with an explicitly chosen logarithm of the base.
LaurentJet exp_linear_jet(Cplx log_base, Cplx center, int order);

/// Coefficient of t^{-1}.
Cplx residue(const LaurentJet& x);

/// Truncation order used for an expansion whose poles have multiplicity at
/// most `max_multiplicity`.
inline int default_jet_order(int max_multiplicity) { return max_multiplicity + 4; }

/// Largest order for which gamma-type jets can be produced (limited by the
/// polygamma orders available).
inline constexpr int kMaxJetOrder = 15;

}  // namespace eulerg
