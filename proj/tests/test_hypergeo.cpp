#include <doctest.h>

#include <cmath>
#include <vector>

#include "eulerg/hypergeo.hpp"
#include "eulerg/log_series.hpp"
#include "eulerg/scalar_gamma.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using eulerg::Cplx;
using eulerg::ErrorKind;
using eulerg::PhqParams;
using testing::rel_err;

namespace {

constexpr double kTol = 1e-16;

ErrorKind kind_of_phq(const PhqParams& p, Cplx z, int max_terms = eulerg::kDefaultMaxTerms) {
  try {
    eulerg::phq(p, z, kTol, max_terms);
  } catch (const eulerg::Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;  // sentinel: nothing thrown
}

// Parameters bounded away from the poles so plain evaluation is defined.
PhqParams random_params(testing::Draw& d, int r, int s) {
  PhqParams p;
  for (int i = 0; i < r; ++i) p.alphas.push_back(d.box(3.0, 2.0));
  for (int i = 0; i < s; ++i) {
    Cplx b = d.box(3.0, 2.0);
    if (std::abs(b.imag()) < 0.2) b += Cplx(0.0, 0.3);
    p.betas.push_back(b);
  }
  return p;
}

Cplx gamma_product(const PhqParams& p) {
  Cplx g = 1.0;
  for (const auto& b : p.betas) g *= eulerg::gamma(b);
  return g;
}

}  // namespace

TEST_CASE("0F0 is the exponential") {
  const auto r = eulerg::phq({}, 1.0, kTol);
  CHECK(rel_err(r.value, std::exp(1.0)) < 1e-15);
  CHECK(r.est_error >= 0.0);
  CHECK(r.est_error < 1e-14);
  // Alternating terms up to ~8 sum to |e^z| ~ 0.05: allow for the cancellation.
  CHECK(rel_err(eulerg::phq({}, Cplx(-3.0, 2.0), kTol).value, std::exp(Cplx(-3.0, 2.0))) < 1e-13);
}

TEST_CASE("values at zero are exactly one") {
  testing::Draw d(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int s = d.integer(0, 4);
    const int r = d.integer(0, s);
    const auto p = random_params(d, r, s);
    const auto rep = eulerg::phq(p, 0.0, kTol);
    CHECK(rep.value == Cplx(1.0));
    CHECK(rep.est_error == 0.0);
  }
}

TEST_CASE("high-precision oracle values") {
  CHECK(rel_err(eulerg::phq({{}, {1.0}}, 0.25, kTol).value, oracle::f01_1_quarter) < 1e-14);
  const PhqParams p{{Cplx(0.5, 0.5)}, {1.5, Cplx(2.0, -1.0)}};
  CHECK(rel_err(eulerg::phq(p, Cplx(3.0, -2.0), kTol).value, oracle::f12_complex) < 1e-13);
}

TEST_CASE("lower parameters at poles and divergence") {
  CHECK(kind_of_phq({{}, {-2.0}}, 0.5) == ErrorKind::BetaAtPole);
  CHECK(kind_of_phq({{}, {0.0}}, 0.5) == ErrorKind::BetaAtPole);
  CHECK(kind_of_phq({{}, {1.0}}, 50.0, 5) == ErrorKind::NoConvergence);
  CHECK(kind_of_phq({{1.0, 1.0}, {1.0}}, 0.5) == ErrorKind::InvalidParams);
  CHECK_THROWS_AS(eulerg::phq({}, 1.0, 0.0), eulerg::Error);
}

TEST_CASE("terminating series stop at the polynomial degree") {
  // 1F1(-3; 2; z) is a cubic.
  const Cplx z{0.7, -1.1};
  const auto r = eulerg::phq({{-3.0}, {2.0}}, z, kTol);
  Cplx want = 0.0, term = 1.0;
  for (int k = 0; k <= 3; ++k) {
    want += term;
    term *= (-3.0 + k) / ((2.0 + k) * (k + 1.0)) * z;
  }
  CHECK(rel_err(r.value, want) < 1e-15);
  CHECK(r.terms_used == 4);
}

TEST_CASE("series coefficients agree with direct Pochhammer products") {
  testing::Draw d(22);
  for (int trial = 0; trial < 20; ++trial) {
    const int s = d.integer(1, 3);
    const auto p = random_params(d, d.integer(0, s), s);
    const auto u = eulerg::phq_log_series(p, 0.0, 1, 30);
    REQUIRE(u.terms.size() == 31);
    double fact = 1.0;
    for (int k = 0; k <= 30; ++k) {
      if (k > 0) fact *= k;
      Cplx want = 1.0 / fact;
      for (const auto& a : p.alphas) want *= eulerg::pochhammer(a, k);
      for (const auto& b : p.betas) want /= eulerg::pochhammer(b, k);
      CHECK(rel_err(u.terms[static_cast<std::size_t>(k)].coeff, want) < 1e-12);
    }
  }
}

TEST_CASE("regularized series") {
  CHECK(rel_err(eulerg::phq_regularized({{}, {1.0}}, 0.25, kTol).value, oracle::f01_1_quarter) < 1e-14);
  CHECK(rel_err(eulerg::phq_regularized({{}, {0.0}}, 1.0, kTol).value, oracle::f01_reg_0_one) < 1e-14);
  CHECK(rel_err(eulerg::phq_regularized({{}, {-2.0}}, 0.5, kTol).value, oracle::f01_reg_m2_half) < 1e-13);
  CHECK(eulerg::phq_regularized({{}, {2.0}}, 0.0, kTol).value == Cplx(1.0));
  CHECK(eulerg::phq_regularized({{}, {-1.0}}, 0.0, kTol).value == Cplx{});
}

TEST_CASE("regularized equals plain divided by the gamma product") {
  testing::Draw d(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int s = d.integer(0, 3);
    const auto p = random_params(d, d.integer(0, s), s);
    const Cplx z = d.box(2.0, 2.0);
    const Cplx plain = eulerg::phq(p, z, kTol).value / gamma_product(p);
    CHECK(rel_err(eulerg::phq_regularized(p, z, kTol).value, plain) < 1e-11);
  }
}

TEST_CASE("the regularized series is continuous at a removable singularity") {
  const Cplx z{0.8, 0.3};
  auto near = [&](double eps) {
    const PhqParams p{{Cplx(0.4, 0.1)}, {-2.0 + eps, 0.75}};
    return eulerg::phq(p, z, kTol).value / gamma_product(p);
  };
  // Linear Richardson over the three offsets: remove the eps and eps^2 terms.
  const Cplx f3 = near(1e-3), f4 = near(1e-4), f5 = near(1e-5);
  const Cplx r45 = (10.0 * f5 - f4) / 9.0;
  const Cplx r34 = (10.0 * f4 - f3) / 9.0;
  const Cplx limit = (100.0 * r45 - r34) / 99.0;
  const Cplx at = eulerg::phq_regularized({{Cplx(0.4, 0.1)}, {-2.0, 0.75}}, z, kTol).value;
  CHECK(rel_err(at, limit) < 1e-6);
}

TEST_CASE("generic fundamental system for a single lower parameter") {
  const PhqParams p{{}, {1.0 / 3.0}};
  const auto sys = eulerg::phq_fundamental_system(p, 20);
  REQUIRE(sys.size() == 2);
  CHECK(eulerg::leading_asymptotics(sys[0]).exponent == Cplx(0.0));
  CHECK(std::abs(eulerg::leading_asymptotics(sys[1]).exponent - 2.0 / 3.0) < 1e-15);
  // Second member is zeta^{2/3} 0F1(; 5/3; zeta): coefficient ratio 1/(5/3).
  CHECK(rel_err(sys[1].terms[1].coeff / sys[1].terms[0].coeff, 0.6) < 1e-15);
  for (const auto& u : sys) {
    CHECK(eulerg::max_log_power(u) == 0);
    CHECK(eulerg::hypergeo_ode_residual(p, u) <= 1e-12 * eulerg::max_coeff(u));
  }
}

TEST_CASE("generic fundamental systems solve the equation") {
  testing::Draw d(24);
  for (int trial = 0; trial < 50; ++trial) {
    const int s = d.integer(1, 4);
    auto p = random_params(d, d.integer(0, s), s);
    if (!eulerg::phq_is_generic(p)) continue;
    const auto sys = eulerg::phq_fundamental_system(p, 30);
    CHECK(sys.size() == static_cast<std::size_t>(s) + 1);
    for (const auto& u : sys) CHECK(eulerg::hypergeo_ode_residual(p, u) <= 1e-10 * eulerg::max_coeff(u));
  }
}

TEST_CASE("non-generic lower parameters are rejected") {
  try {
    eulerg::phq_fundamental_system({{}, {0.5, 2.5}});
    FAIL("expected NonGenericParameters");
  } catch (const eulerg::Error& e) {
    CHECK(e.kind() == ErrorKind::NonGenericParameters);
  }
  CHECK_FALSE(eulerg::phq_is_generic({{}, {3.0}}));
  CHECK(eulerg::phq_is_generic({{}, {0.5, 0.75}}));
}

TEST_CASE("residual of non-solutions") {
  const PhqParams p{{}, {1.0 / 3.0}};
  eulerg::LogPowerSeries one;
  one.terms.push_back({0.0, 0, 1.0});
  one.trunc_order = 2;
  CHECK(eulerg::hypergeo_ode_residual(p, one) == doctest::Approx(1.0));

  eulerg::LogPowerSeries zero;
  zero.trunc_order = 5;
  CHECK(eulerg::hypergeo_ode_residual(p, zero) == 0.0);
}
