#include <doctest.h>

#include <cmath>
#include <vector>

#include "eulerg/log_series.hpp"
#include "test_support.hpp"

using eulerg::Cplx;
using eulerg::ErrorKind;
using eulerg::LogPowerSeries;
using eulerg::LogTerm;
using testing::rel_err;

namespace {

LogPowerSeries make(std::vector<LogTerm> terms, int trunc = 4, int sign = 1) {
  LogPowerSeries u;
  u.terms = std::move(terms);
  u.trunc_order = trunc;
  u.arg_sign = sign;
  return u;
}

}  // namespace

TEST_CASE("canonical form merges, sorts and drops zeros") {
  const auto u = eulerg::canonicalize(make({{2.0, 0, 1.0}, {0.5, 1, 2.0}, {2.0, 0, 3.0}, {0.5, 0, 0.0}, {0.5, 1, -2.0},
                                            {1.0, 2, 4.0}}));
  REQUIRE(u.terms.size() == 2);
  CHECK(u.terms[0].exponent == Cplx(1.0));
  CHECK(u.terms[0].log_power == 2);
  CHECK(u.terms[1].exponent == Cplx(2.0));
  CHECK(u.terms[1].coeff == Cplx(4.0));
}

TEST_CASE("theta acts term by term on powers and logarithms") {
  // theta(zeta^b ln^2 zeta) = b zeta^b ln^2 + 2 zeta^b ln
  const Cplx b{0.3, 0.2};
  const auto u = eulerg::theta_plus(make({{b, 2, 1.0}}), 0.0);
  REQUIRE(u.terms.size() == 2);
  CHECK(u.terms[0].log_power == 1);
  CHECK(u.terms[0].coeff == Cplx(2.0));
  CHECK(u.terms[1].log_power == 2);
  CHECK(u.terms[1].coeff == b);

  // Compare with a numerical derivative of the evaluated function.
  const Cplx z{0.7, 0.4};
  const double h = 1e-5;
  const auto f = make({{b, 2, 1.0}, {b + 1.0, 1, Cplx(0.5, -1.0)}});
  const Cplx fd = z * (eulerg::evaluate(f, z + h) - eulerg::evaluate(f, z - h)) / (2.0 * h);
  CHECK(rel_err(eulerg::evaluate(eulerg::theta_plus(f, 0.0), z), fd) < 1e-8);
  // theta + c is theta plus c times the identity
  const Cplx c{1.5, -0.5};
  CHECK(rel_err(eulerg::evaluate(eulerg::theta_plus(f, c), z), fd + c * eulerg::evaluate(f, z)) < 1e-8);
}

TEST_CASE("evaluation in the reflected variable") {
  const auto u = make({{0.5, 1, 1.0}}, 4, -1);
  const Cplx z{-2.0, 0.5};
  const Cplx x = -z;
  CHECK(rel_err(eulerg::evaluate(u, z), std::sqrt(x) * std::log(x)) < 1e-15);
  // Multiplying by zeta keeps the sign convention: zeta * f(-zeta) = -(x f).
  const auto v = eulerg::times_zeta(u);
  CHECK(rel_err(eulerg::evaluate(v, z), z * eulerg::evaluate(u, z)) < 1e-14);
}

TEST_CASE("integer exponents of a negative argument stay real") {
  const auto u = make({{3.0, 0, 1.0}, {-2.0, 0, 1.0}});
  const Cplx v = eulerg::evaluate(u, -1.5);
  CHECK(v.imag() == 0.0);
  CHECK(rel_err(v, -3.375 + 1.0 / 2.25) < 1e-15);
}

TEST_CASE("evaluation at zero is rejected") {
  CHECK_THROWS_AS(eulerg::evaluate(make({{1.0, 0, 1.0}}), 0.0), eulerg::Error);
}

TEST_CASE("tail magnitude counts only terms at or past the truncation order") {
  const auto u = make({{0.25, 0, 1.0}, {1.25, 0, 1.0}, {2.25, 0, 2.0}, {3.25, 0, 4.0}}, 2);
  const double z = 0.5;
  const double want = 2.0 * std::pow(z, 2.25) + 4.0 * std::pow(z, 3.25);
  CHECK(std::abs(eulerg::tail_magnitude(u, z) - want) < 1e-15);
}

TEST_CASE("leading asymptotics") {
  const auto u = eulerg::canonicalize(make({{1.5, 0, 2.0}, {0.5, 0, 3.0}, {0.5, 2, -1.0}, {Cplx(0.5, 3.0), 1, 7.0}}));
  const auto lead = eulerg::leading_asymptotics(u);
  CHECK(lead.exponent == Cplx(0.5));
  CHECK(lead.log_power == 2);
  CHECK(lead.coeff == Cplx(-1.0));

  try {
    eulerg::leading_asymptotics(make({}));
    FAIL("expected EmptySeries");
  } catch (const eulerg::Error& e) {
    CHECK(e.kind() == ErrorKind::EmptySeries);
  }
}

TEST_CASE("residual norm ignores orders at and beyond truncation") {
  const auto source = make({{0.0, 0, 1.0}, {1.0, 0, 1.0}}, 2);
  const auto residual = make({{1.0, 0, 0.25}, {2.0, 0, 9.0}}, 2);
  CHECK(eulerg::residual_norm(source, residual) == doctest::Approx(0.25));
}

TEST_CASE("determinants") {
  CHECK(eulerg::determinant({}) == Cplx(1.0));
  CHECK(eulerg::determinant({{Cplx(3.0)}}) == Cplx(3.0));
  CHECK(rel_err(eulerg::determinant({{1.0, 2.0}, {3.0, 4.0}}), -2.0) < 1e-15);
  CHECK(eulerg::determinant({{1.0, 2.0}, {2.0, 4.0}}) == Cplx{});
  // Vandermonde: prod_{i<j} (x_j - x_i)
  const std::vector<Cplx> x{Cplx(0.5, 1.0), 2.0, Cplx(-1.0, 0.3), 3.5};
  std::vector<std::vector<Cplx>> v(4, std::vector<Cplx>(4));
  Cplx want = 1.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) v[i][j] = std::pow(x[i], static_cast<int>(j));
    for (std::size_t j = i + 1; j < 4; ++j) want *= x[j] - x[i];
  }
  CHECK(rel_err(eulerg::determinant(v), want) < 1e-13);
}

TEST_CASE("Wronskian of a log pair and of dependent solutions") {
  // 1 and ln zeta solve theta^2 y = 0; their Wronskian in theta is 1.
  const auto one = make({{0.0, 0, 1.0}});
  const auto log = make({{0.0, 1, 1.0}});
  const auto w = eulerg::generalized_wronskian({one, log}, Cplx(0.3, 0.2));
  CHECK(rel_err(w.det, 1.0) < 1e-15);
  CHECK(w.normalized > 0.1);

  // Rescaling a solution leaves the normalized value unchanged.
  const auto w2 = eulerg::generalized_wronskian({eulerg::series_scale(one, 1e6), log}, Cplx(0.3, 0.2));
  CHECK(w2.normalized == doctest::Approx(w.normalized).epsilon(1e-12));

  const auto dep = eulerg::generalized_wronskian({log, eulerg::series_scale(log, 2.0)}, Cplx(0.3, 0.2));
  CHECK(dep.normalized < 1e-14);
}
