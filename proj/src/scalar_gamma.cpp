#include "eulerg/scalar_gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace eulerg {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6.0,           -1.0 / 30.0,         1.0 / 42.0,         -1.0 / 30.0,
    5.0 / 66.0,          -691.0 / 2730.0,     7.0 / 6.0,          -3617.0 / 510.0,
    43867.0 / 798.0,     -174611.0 / 330.0,   854513.0 / 138.0,   -236364091.0 / 2730.0,
};

// zeta(k) - 1 for k = 2..30
constexpr std::array<double, 29> kZetaMinusOne = {
    0.644934066848226436,   0.202056903159594285,   0.0823232337111381915,
    0.0369277551433699263,  0.0173430619844491397,  0.00834927738192282684,
    0.00407735619794433938, 0.00200839282608221442, 0.000994575127818085337,
    0.000494188604119464559, 0.000246086553308048299, 0.000122713347578489147,
    6.12481350587048293e-5, 3.05882363070204936e-5, 1.52822594086518717e-5,
    7.63719763789976227e-6, 3.81729326499983986e-6, 1.90821271655393893e-6,
    9.53962033872796113e-7, 4.76932986787806463e-7, 2.3845050272773299e-7,
    1.19219925965311073e-7, 5.96081890512594796e-8, 2.98035035146522802e-8,
    1.49015548283650412e-8, 7.45071178983542949e-9, 3.72533402478845705e-9,
    1.86265972351304901e-9, 9.31327432419668183e-10,
};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Positive integer n >= 1 if z is exactly one (and small enough for an exact
// factorial table), otherwise 0.
int exact_positive_integer(Cplx z) {
  if (z.imag() != 0.0) return 0;
  const double x = z.real();
  if (x >= 1.0 && x <= 170.0 && x == std::floor(x)) return static_cast<int>(x);
  return 0;
}

// Taylor series of ln Gamma about 1 and 2; these keep full relative accuracy
// next to the two real zeros of ln Gamma.
Cplx log_gamma_near_one(Cplx w) {
  Cplx sum = -kEulerGamma * w;
  Cplx wk = w;
  for (int k = 2; k <= 30; ++k) {
    wk *= w;
    const double zeta_k = 1.0 + kZetaMinusOne[k - 2];
    sum += ((k % 2 == 0) ? zeta_k : -zeta_k) / k * wk;
  }
  return sum;
}

Cplx log_gamma_near_two(Cplx w) {
  Cplx sum = (1.0 - kEulerGamma) * w;
  Cplx wk = w;
  for (int k = 2; k <= 30; ++k) {
    wk *= w;
    const double c = kZetaMinusOne[k - 2];
    sum += ((k % 2 == 0) ? c : -c) / k * wk;
  }
  return sum;
}

Cplx log_gamma_stirling(Cplx w) {
  Cplx sum = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi);
  const Cplx inv = 1.0 / w;
  const Cplx inv2 = inv * inv;
  Cplx p = inv;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const Cplx term = kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    p *= inv2;
  }
  return sum;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleOfGamma: return "PoleOfGamma";
    case ErrorKind::CenterMismatch: return "CenterMismatch";
    case ErrorKind::ZeroJet: return "ZeroJet";
    case ErrorKind::ZeroBase: return "ZeroBase";
    case ErrorKind::BetaAtPole: return "BetaAtPole";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonGenericParameters: return "NonGenericParameters";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::BadPrefix: return "BadPrefix";
    case ErrorKind::EmptySeries: return "EmptySeries";
    case ErrorKind::DegenerateSpectralParameter: return "DegenerateSpectralParameter";
    case ErrorKind::ZeroPoint: return "ZeroPoint";
    case ErrorKind::NonIntegrableAtOrigin: return "NonIntegrableAtOrigin";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

int nonpositive_integer_index(Cplx z) {
  if (std::abs(z.imag()) > kPoleTolerance) return -1;
  const double x = z.real();
  if (x > kPoleTolerance) return -1;
  const double n = std::round(-x);
  if (std::abs(x + n) > kPoleTolerance) return -1;
  return static_cast<int>(n);
}

Cplx sin_pi(Cplx z) {
  const double n = std::round(z.real());
  const Cplx s = std::sin(kPi * Cplx(z.real() - n, z.imag()));
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

Cplx log_gamma(Cplx z) {
  require_finite(z, "log_gamma argument");
  if (nonpositive_integer_index(z) >= 0)
    throw Error(ErrorKind::PoleOfGamma, "log_gamma at a nonpositive integer");
  if (std::abs(z - 1.0) <= 0.2) return log_gamma_near_one(z - 1.0);
  if (std::abs(z - 2.0) <= 0.2) return log_gamma_near_two(z - 2.0);

  // ln Gamma(z) = ln Gamma(z + n) - sum_k log(z + k). Each log has its cut on
  // (-inf, -k], so the sum is the principal branch off the negative axis.
  Cplx shift_sum = 0.0;
  Cplx w = z;
  while (w.real() < 15.0) {
    shift_sum += std::log(w);
    w += 1.0;
  }
  return log_gamma_stirling(w) - shift_sum;
}

Cplx gamma(Cplx z) {
  require_finite(z, "gamma argument");
  if (nonpositive_integer_index(z) >= 0)
    throw Error(ErrorKind::PoleOfGamma, "gamma at a nonpositive integer");
  if (const int n = exact_positive_integer(z)) return factorial(n - 1);
  if (z.real() >= 0.5) return std::exp(log_gamma(z));
  return kPi / (sin_pi(z) * std::exp(log_gamma(1.0 - z)));
}

Cplx recip_gamma(Cplx z) {
  require_finite(z, "recip_gamma argument");
  if (nonpositive_integer_index(z) >= 0) return 0.0;
  if (const int n = exact_positive_integer(z)) return 1.0 / factorial(n - 1);
  if (z.real() >= 0.5) return std::exp(-log_gamma(z));
  return sin_pi(z) / kPi * std::exp(log_gamma(1.0 - z));
}

Cplx pochhammer(Cplx g, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidParams, "pochhammer with negative k");
  if (k <= 64) {
    Cplx p = 1.0;
    for (int i = 0; i < k; ++i) p *= g + static_cast<double>(i);
    return p;
  }
  if (const int n = nonpositive_integer_index(g); n >= 0) {
    if (k > n) return 0.0;
    // (g)_k = (-1)^k (1 - g - k)_k with 1 - g - k a positive number.
    const Cplx r = std::exp(log_gamma(1.0 - g) - log_gamma(1.0 - g - static_cast<double>(k)));
    return (k % 2 == 0) ? r : -r;
  }
  return std::exp(log_gamma(g + static_cast<double>(k)) - log_gamma(g));
}

Cplx polygamma(int order, Cplx z) {
  require_finite(z, "polygamma argument");
  if (order < 0 || order > 16)
    throw Error(ErrorKind::InvalidParams, "polygamma order must be in [0, 16]");
  if (nonpositive_integer_index(z) >= 0)
    throw Error(ErrorKind::PoleOfGamma, "polygamma at a nonpositive integer");

  const double nfact = factorial(order);
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;  // (-1)^order
  const double threshold = 12.0 + order;

  // psi^(n)(z) = psi^(n)(z + 1) - (-1)^n n! / z^(n+1)
  Cplx shift_sum = 0.0;
  Cplx w = z;
  while (w.real() < threshold) {
    shift_sum += std::pow(w, -(order + 1));
    w += 1.0;
  }
  shift_sum *= -sign * nfact;

  const Cplx inv = 1.0 / w;
  const Cplx inv2 = inv * inv;
  Cplx asym;
  if (order == 0) {
    asym = std::log(w) - 0.5 * inv;
    Cplx p = inv2;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
      const Cplx term = kBernoulli[k - 1] / (2.0 * k) * p;
      asym -= term;
      if (std::abs(term) < 1e-18 * std::abs(asym)) break;
      p *= inv2;
    }
  } else {
    const Cplx inv_n = std::pow(inv, order);
    Cplx sum = factorial(order - 1) + 0.5 * nfact * inv;
    // B_2k (2k+n-1)! / (2k)! / w^(2k)
    Cplx p = inv2;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
      const int twok = static_cast<int>(2 * k);
      double ratio = 1.0;  // (2k+n-1)! / (2k)!
      for (int i = twok + 1; i <= twok + order - 1; ++i) ratio *= i;
      const Cplx term = kBernoulli[k - 1] * ratio * p;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      p *= inv2;
    }
    asym = -sign * sum * inv_n;  // (-1)^(n+1)
  }
  return asym + shift_sum;
}

}  // namespace eulerg
