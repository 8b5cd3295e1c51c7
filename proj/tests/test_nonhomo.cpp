#include <doctest.h>

#include <cmath>
#include <vector>

#include "eulerg/log_series.hpp"
#include "eulerg/nonhomo.hpp"
#include "test_support.hpp"

using eulerg::Cplx;
using eulerg::ErrorKind;
using eulerg::RhsFunction;
using testing::rel_err;

namespace {

Cplx power(Cplx z, Cplx e) { return std::exp(e * std::log(z)); }

Cplx indicial_derivative(const std::vector<Cplx>& lambdas, Cplx l) {
  Cplx sum = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    Cplx p = 1.0;
    for (std::size_t j = 0; j < lambdas.size(); ++j)
      if (j != i) p *= l - lambdas[j];
    sum += p;
  }
  return sum;
}

}  // namespace

TEST_CASE("multiplicity grouping") {
  const auto g = eulerg::group_multiplicities({1.0, 1.0, 2.0});
  REQUIRE(g.groups.size() == 2);
  CHECK(g.groups[0].value == Cplx(1.0));
  CHECK(g.groups[0].multiplicity == 2);
  CHECK(g.groups[1].value == Cplx(2.0));
  CHECK(g.groups[1].multiplicity == 1);

  const auto h = eulerg::group_multiplicities({0.5});
  REQUIRE(h.groups.size() == 1);
  CHECK(h.groups[0].multiplicity == 1);

  const Cplx i{0.0, 1.0};
  const auto k = eulerg::group_multiplicities({i, i, i + 1e-12});
  REQUIRE(k.groups.size() == 1);
  CHECK(k.groups[0].multiplicity == 3);
}

TEST_CASE("indicial polynomial") {
  CHECK(eulerg::indicial_polynomial({Cplx(0.3, 1.0), 2.0}, Cplx(0.3, 1.0)) == Cplx{});
  CHECK(eulerg::indicial_polynomial({1.0, 2.0}, 0.0) == Cplx(2.0));
  CHECK(eulerg::indicial_polynomial({1.0, 2.0, 3.0}, 4.0) == Cplx(6.0));
}

TEST_CASE("homogeneous basis") {
  const auto b = eulerg::homogeneous_basis({1.0, 1.0});
  REQUIRE(b.size() == 2);
  CHECK(b[0].exponent == Cplx(1.0));
  CHECK(b[0].log_power == 0);
  CHECK(b[1].log_power == 1);

  const auto c = eulerg::homogeneous_basis({0.0});
  REQUIRE(c.size() == 1);
  CHECK(eulerg::eval_basis(c[0], Cplx(3.0, 1.0)) == Cplx(1.0));

  const auto d = eulerg::homogeneous_basis({2.0, 5.0});
  REQUIRE(d.size() == 2);
  CHECK(d[1].exponent == Cplx(5.0));

  testing::Draw r(61);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Cplx> l;
    const int n = r.integer(1, 6);
    for (int j = 0; j < n; ++j) l.push_back(static_cast<double>(r.integer(-1, 1)));
    CHECK(eulerg::homogeneous_basis(l).size() == l.size());
  }
  CHECK_THROWS_AS(eulerg::eval_basis(b[0], 0.0), eulerg::Error);
}

TEST_CASE("basis elements solve the homogeneous equation") {
  const std::vector<Cplx> l{0.5, 0.5, Cplx(-1.0, 0.7)};
  const RhsFunction zero = [](Cplx) { return Cplx{}; };
  for (const auto& e : eulerg::homogeneous_basis(l)) {
    const RhsFunction y = [e](Cplx z) { return eulerg::eval_basis(e, z); };
    CHECK(eulerg::nonhomo_residual(l, y, zero, Cplx(1.2, 0.4)) <= 1e-6);
  }
}

TEST_CASE("operator identities") {
  testing::Draw d(62);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = d.integer(1, 4);
    std::vector<Cplx> l;
    for (int j = 0; j < n; ++j) l.push_back(d.box(2.0, 1.0));
    const Cplx lam = d.box(2.0, 1.0);
    // Symbolically: prod (theta - lambda_j) z^lam = P(lam) z^lam.
    eulerg::LogPowerSeries u;
    u.trunc_order = 1;
    u.terms.push_back({lam, 0, 1.0});
    for (const auto& lj : l) u = eulerg::theta_plus(u, -lj);
    REQUIRE(u.terms.size() == 1);
    CHECK(rel_err(u.terms[0].coeff, eulerg::indicial_polynomial(l, lam)) < 1e-13);

    // Numerically for z^lam ln z.
    const RhsFunction y = [lam](Cplx z) { return power(z, lam) * std::log(z); };
    const Cplx p = eulerg::indicial_polynomial(l, lam);
    const Cplx dp = indicial_derivative(l, lam);
    const RhsFunction f = [=](Cplx z) { return (dp + p * std::log(z)) * power(z, lam); };
    const Cplx z = Cplx(d.uniform(0.5, 2.0), d.uniform(-1.0, 1.0));
    const double scale = std::abs(f(z) / std::pow(z, n)) + std::abs(power(z, lam - static_cast<double>(n)));
    // Each composed stencil amplifies rounding by roughly 1/h = 1e3/|z|.
    const double fd_noise = std::max(1e-6, 1e-15 * std::pow(1e3, n));
    CHECK(eulerg::nonhomo_residual(l, y, f, z) <= fd_noise * scale);
  }
}

TEST_CASE("monomial right-hand sides") {
  const std::vector<Cplx> l{-1.0, Cplx(-0.5, 0.3)};
  const Cplx z{0.8, 0.6};
  const RhsFunction f = [](Cplx w) { return w * w; };
  const Cplx want = z * z / eulerg::indicial_polynomial(l, 2.0);
  CHECK(rel_err(eulerg::particular_solution(l, f, z), want) < 1e-8);

  // Positive exponents are fine as long as f vanishes fast enough.
  const RhsFunction cube = [](Cplx w) { return w * w * w; };
  CHECK(rel_err(eulerg::particular_solution({1.5}, cube, 2.0), 8.0 / 1.5) < 1e-8);

  const RhsFunction zero = [](Cplx) { return Cplx{}; };
  CHECK(eulerg::particular_solution(l, zero, z) == Cplx{});

  const RhsFunction one = [](Cplx) { return Cplx(1.0); };
  CHECK(rel_err(eulerg::particular_solution({-1.0}, one, 1.0), 1.0) < 1e-10);
  const RhsFunction u = [&](Cplx w) { return eulerg::particular_solution({-1.0}, one, w); };
  CHECK(eulerg::nonhomo_residual({-1.0}, u, one, 1.0) < 1e-6);
}

TEST_CASE("polynomial right-hand sides match the indicial oracle") {
  testing::Draw d(63);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = d.integer(1, 3);
    std::vector<Cplx> l;
    for (int j = 0; j < n; ++j) l.push_back(Cplx(d.uniform(-2.0, -0.2), d.uniform(-1.0, 1.0)));
    Cplx c[4];
    for (auto& ck : c) ck = d.box(1.0, 1.0);
    const RhsFunction f = [c](Cplx w) { return c[0] + w * (c[1] + w * (c[2] + w * c[3])); };
    const Cplx z = Cplx(d.uniform(0.2, 2.0), d.uniform(-1.5, 1.5));
    Cplx want = 0.0;
    for (int k = 0; k < 4; ++k) want += c[k] * std::pow(z, k) / eulerg::indicial_polynomial(l, static_cast<double>(k));
    CHECK(rel_err(eulerg::particular_solution(l, f, z), want) < 1e-8);
  }
}

TEST_CASE("superposition and residual of a transcendental right-hand side") {
  const std::vector<Cplx> l{-0.5, Cplx(-0.25, 0.5)};
  const RhsFunction f1 = [](Cplx w) { return std::exp(w); };
  const RhsFunction f2 = [](Cplx w) { return std::sin(w); };
  const RhsFunction both = [&](Cplx w) { return f1(w) + f2(w); };
  const Cplx z{1.1, -0.3};
  const Cplx sum = eulerg::particular_solution(l, f1, z) + eulerg::particular_solution(l, f2, z);
  CHECK(rel_err(eulerg::particular_solution(l, both, z), sum) < 1e-8);

  const RhsFunction y = [&](Cplx w) { return eulerg::particular_solution(l, f1, w); };
  CHECK(eulerg::nonhomo_residual(l, y, f1, z) <= 1e-6 * std::abs(f1(z) / (z * z)));
}

TEST_CASE("non-solutions leave a residual") {
  const Cplx lam{0.3, 0.2};
  const Cplx z{1.3, 0.5};
  const RhsFunction y = [lam](Cplx w) { return power(w, lam + 1.0); };
  const RhsFunction zero = [](Cplx) { return Cplx{}; };
  CHECK(std::abs(eulerg::nonhomo_residual({lam}, y, zero, z) - std::abs(power(z, lam))) < 1e-8);
}

TEST_CASE("general solution adds homogeneous terms") {
  const std::vector<Cplx> l{-1.0, -1.0};
  const RhsFunction f = [](Cplx w) { return w; };
  const Cplx z{0.9, 0.2};
  const auto r = eulerg::general_solution(l, f, z, {2.0, Cplx(0.0, 1.0)});
  const Cplx want = z / 4.0 + 2.0 / z + Cplx(0.0, 1.0) * std::log(z) / z;
  CHECK(rel_err(r.value, want) < 1e-8);
  CHECK(r.est_error >= 0.0);
  try {
    eulerg::general_solution(l, f, z, {1.0, 2.0, 3.0});
    FAIL("expected InvalidParams");
  } catch (const eulerg::Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParams);
  }
}

TEST_CASE("integrability at the origin is diagnosed") {
  const RhsFunction one = [](Cplx) { return Cplx(1.0); };
  try {
    eulerg::particular_solution({1.0}, one, 1.0);
    FAIL("expected NonIntegrableAtOrigin");
  } catch (const eulerg::Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegrableAtOrigin);
  }
  CHECK_THROWS_AS(eulerg::particular_solution({-1.0}, one, 0.0), eulerg::Error);
  CHECK(eulerg::probe_leading_exponent([](Cplx w) { return w * w + w * w * w; }, 1.0) == 2.0);
  CHECK(std::abs(eulerg::probe_leading_exponent([](Cplx w) { return std::sqrt(w); }, 1.0) - 0.5) < 1e-6);
}
