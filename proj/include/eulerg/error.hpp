#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerg {

using Cplx = std::complex<double>;

enum class ErrorKind {
  PoleOfGamma,
  CenterMismatch,
  ZeroJet,
  ZeroBase,
  BetaAtPole,
  NoConvergence,
  NonGenericParameters,
  InvalidParams,
  BadPrefix,
  EmptySeries,
  DegenerateSpectralParameter,
  ZeroPoint,
  NonIntegrableAtOrigin,
  QuadratureFailure,
  NonFinite,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so front ends can map
// it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline bool is_finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(Cplx z, const char* what) {
  if (!is_finite(z)) throw Error(ErrorKind::NonFinite, std::string(what) + " is not finite");
}

}  // namespace eulerg
