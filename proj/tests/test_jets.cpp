#include <doctest.h>

#include <cmath>
#include <vector>

#include "eulerg/jets.hpp"
#include "eulerg/scalar_gamma.hpp"
#include "test_support.hpp"

using eulerg::Cplx;
using eulerg::ErrorKind;
using eulerg::LaurentJet;
using testing::rel_err;

namespace {

LaurentJet random_regular(testing::Draw& d, Cplx center, int order) {
  std::vector<Cplx> c(static_cast<std::size_t>(order) + 1);
  for (auto& v : c) v = d.box(2.0, 2.0);
  return eulerg::make_jet(center, 0, c);
}

// Evaluate the truncated Laurent polynomial at offset t.
Cplx eval_jet(const LaurentJet& x, Cplx t) {
  Cplx sum = 0.0;
  for (int k = x.lowest(); k <= x.highest(); ++k) sum += x.coeff(k) * std::pow(t, k);
  return sum;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const eulerg::Error& e) {
    return e.kind();
  }
  FAIL("expected an eulerg::Error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("multiplication by the unit jet is the identity") {
  testing::Draw d(11);
  const LaurentJet x = random_regular(d, 0.4, 5);
  const LaurentJet y = eulerg::jet_mul(x, eulerg::unit_jet(1.0, 0.4, 5));
  REQUIRE(y.order == 5);
  for (int k = 0; k <= 5; ++k) CHECK(y.coeff(k) == x.coeff(k));
}

TEST_CASE("a simple pole times a simple zero gives one") {
  const LaurentJet inv = eulerg::monomial_jet(0.0, -1, 4);
  const LaurentJet t = eulerg::monomial_jet(0.0, 1, 4);
  CHECK(inv.pole_order == 1);
  const LaurentJet one = eulerg::jet_mul(inv, t);
  CHECK(one.pole_order == 0);
  CHECK(one.coeff(0) == Cplx(1.0));
  for (int k = 1; k <= one.order; ++k) CHECK(one.coeff(k) == Cplx{});
  CHECK(eulerg::residue(one) == Cplx{});
}

TEST_CASE("products agree with brute-force convolution") {
  testing::Draw d(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = d.integer(0, 8);
    const LaurentJet x = random_regular(d, 0.0, order);
    const LaurentJet y = random_regular(d, 0.0, order);
    const LaurentJet z = eulerg::jet_mul(x, y);
    REQUIRE(z.order == order);
    for (int k = 0; k <= order; ++k) {
      Cplx want = 0.0;
      for (int i = 0; i <= k; ++i) want += x.coeffs[static_cast<std::size_t>(i)] * y.coeffs[static_cast<std::size_t>(k - i)];
      CHECK(std::abs(z.coeff(k) - want) <= 1e-13 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("the residue of a product is the convolution across zero") {
  testing::Draw d(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int px = d.integer(0, 3);
    const int py = d.integer(0, 3);
    std::vector<Cplx> cx(static_cast<std::size_t>(px + 6) + 1), cy(static_cast<std::size_t>(py + 6) + 1);
    for (auto& v : cx) v = d.box(1.0, 1.0);
    for (auto& v : cy) v = d.box(1.0, 1.0);
    cx[0] += 3.0;  // keep the leading coefficients away from zero
    cy[0] += 3.0;
    const LaurentJet x = eulerg::make_jet(0.0, px, cx);
    const LaurentJet y = eulerg::make_jet(0.0, py, cy);
    Cplx want = 0.0;
    for (int i = -px; i <= x.order; ++i) want += x.coeff(i) * y.coeff(-1 - i);
    CHECK(eulerg::residue(eulerg::jet_mul(x, y)) == want);
  }
}

TEST_CASE("ring axioms hold coefficient-wise up to truncation") {
  testing::Draw d(14);
  for (int trial = 0; trial < 25; ++trial) {
    const LaurentJet x = random_regular(d, 1.5, 6);
    const LaurentJet y = random_regular(d, 1.5, 6);
    const LaurentJet z = random_regular(d, 1.5, 6);
    const LaurentJet a1 = eulerg::jet_mul(eulerg::jet_mul(x, y), z);
    const LaurentJet a2 = eulerg::jet_mul(x, eulerg::jet_mul(y, z));
    const LaurentJet d1 = eulerg::jet_mul(x, eulerg::jet_add(y, z));
    const LaurentJet d2 = eulerg::jet_add(eulerg::jet_mul(x, y), eulerg::jet_mul(x, z));
    for (int k = 0; k <= 6; ++k) {
      CHECK(std::abs(a1.coeff(k) - a2.coeff(k)) <= 1e-12 * (1.0 + std::abs(a1.coeff(k))));
      CHECK(std::abs(d1.coeff(k) - d2.coeff(k)) <= 1e-12 * (1.0 + std::abs(d1.coeff(k))));
    }
  }
}

TEST_CASE("pole orders add and truncation is reported honestly") {
  const LaurentJet g = eulerg::gamma_jet(0.0, 0.0, 5);
  const LaurentJet g2 = eulerg::jet_mul(g, g);
  CHECK(g2.pole_order == 2);
  CHECK(g2.order == 4);
  CHECK(g2.coeff(-2) == Cplx(1.0));
}

TEST_CASE("reciprocal of simple jets") {
  const LaurentJet half = eulerg::jet_recip(eulerg::unit_jet(2.0, 0.0, 3));
  CHECK(half.pole_order == 0);
  CHECK(half.coeff(0) == Cplx(0.5));
  for (int k = 1; k <= 3; ++k) CHECK(half.coeff(k) == Cplx{});

  const LaurentJet inv = eulerg::jet_recip(eulerg::monomial_jet(0.0, 1, 3));
  CHECK(inv.pole_order == 1);
  CHECK(inv.coeff(-1) == Cplx(1.0));
  CHECK(inv.coeff(0) == Cplx{});
}

TEST_CASE("reciprocal times original is one up to truncation") {
  testing::Draw d(15);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentJet x = random_regular(d, 0.0, 7);
    x.coeffs[0] += 2.5;
    const LaurentJet one = eulerg::jet_mul(x, eulerg::jet_recip(x));
    CHECK(std::abs(one.coeff(0) - 1.0) < 1e-13);
    for (int k = 1; k <= one.order; ++k) CHECK(std::abs(one.coeff(k)) < 1e-11);
  }
}

TEST_CASE("gamma jets carry the classical residues") {
  const Cplx b{0.37, -0.2};
  const LaurentJet g0 = eulerg::gamma_jet(b, b, 2);
  CHECK(g0.pole_order == 1);
  CHECK(rel_err(g0.coeff(-1), -1.0) < 1e-13);
  const LaurentJet g2 = eulerg::gamma_jet(b, b + 2.0, 2);
  CHECK(rel_err(g2.coeff(-1), -0.5) < 1e-13);

  const LaurentJet one = eulerg::gamma_jet(1.0, 0.0, 0);
  CHECK(one.pole_order == 0);
  CHECK(one.order == 0);
  CHECK(rel_err(one.coeff(0), 1.0) < 1e-15);

  double fact = 1.0;
  for (int n = 0; n <= 8; ++n) {
    if (n > 0) fact *= n;
    const double want = (n % 2 == 0 ? -1.0 : 1.0) / fact;
    CHECK(rel_err(eulerg::residue(eulerg::gamma_jet(b, b + static_cast<double>(n), 3)), want) < 1e-13);
  }
}

TEST_CASE("gamma jet at a regular point reproduces the function") {
  testing::Draw d(16);
  for (int trial = 0; trial < 20; ++trial) {
    const Cplx c = d.box(3.0, 2.0) + 0.5;
    const Cplx center = d.box(0.5, 0.5);
    if (eulerg::nonpositive_integer_index(c - center) >= 0) continue;
    const LaurentJet g = eulerg::gamma_jet(c, center, 8);
    // Two step sizes: the truncation error must shrink like t^9.
    const Cplx t1{1e-2, 5e-3};
    const Cplx t2 = t1 / 2.0;
    const double e1 = std::abs(eval_jet(g, t1) - eulerg::gamma(c - center - t1));
    const double e2 = std::abs(eval_jet(g, t2) - eulerg::gamma(c - center - t2));
    const double scale = std::abs(eulerg::gamma(c - center));
    CHECK(e2 <= 1e-8 * scale + 1e-13 * scale);
    CHECK(e1 <= 1e-8 * scale);
  }
}

TEST_CASE("reciprocal gamma jets") {
  const LaurentJet one = eulerg::recip_gamma_jet(1.0, 0.0, 3);
  CHECK(rel_err(one.coeff(0), 1.0) < 1e-15);

  const LaurentJet zero = eulerg::recip_gamma_jet(0.0, 0.0, 3);
  CHECK(zero.pole_order == 0);
  CHECK(zero.coeff(0) == Cplx{});
  CHECK(rel_err(zero.coeff(1), 1.0) < 1e-14);
  CHECK(rel_err(zero.coeff(2), 0.57721566490153286061) < 1e-13);

  // Finite-difference oracle at regular points.
  testing::Draw d(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Cplx c = d.box(3.0, 1.5);
    const Cplx center = d.box(0.5, 0.5);
    const LaurentJet r = eulerg::recip_gamma_jet(c, center, 3);
    const double h = 1e-4;
    const Cplx x = c + center;
    auto f = [](Cplx w) { return eulerg::recip_gamma(w); };
    const Cplx d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const Cplx d2 = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    const double scale = std::max({std::abs(f(x)), std::abs(d1), 1.0});
    CHECK(std::abs(r.coeff(0) - f(x)) <= 1e-13 * scale);
    CHECK(std::abs(r.coeff(1) - d1) <= 1e-7 * scale);
    CHECK(std::abs(r.coeff(2) - d2 / 2.0) <= 1e-5 * std::max(scale, std::abs(d2)));
  }
}

TEST_CASE("power jets") {
  const LaurentJet one = eulerg::power_jet(1.0, Cplx{2.3, -1.0}, 4);
  CHECK(rel_err(one.coeff(0), 1.0) < 1e-15);
  for (int k = 1; k <= 4; ++k) CHECK(one.coeff(k) == Cplx{});

  const LaurentJet e = eulerg::power_jet(std::exp(1.0), 0.0, 2);
  CHECK(rel_err(e.coeff(0), 1.0) < 1e-15);
  CHECK(rel_err(e.coeff(1), 1.0) < 1e-15);
  CHECK(rel_err(e.coeff(2), 0.5) < 1e-15);

  const Cplx zeta{2.0, 1.0};
  const Cplx w0 = 0.3;
  const LaurentJet p = eulerg::power_jet(zeta, w0, 3);
  auto f = [&](Cplx w) { return std::exp(w * std::log(zeta)); };
  const double h = 1e-4;
  const Cplx d1 = (f(w0 + h) - f(w0 - h)) / (2.0 * h);
  const Cplx d2 = (f(w0 + h) - 2.0 * f(w0) + f(w0 - h)) / (h * h);
  CHECK(rel_err(p.coeff(0), f(w0)) < 1e-14);
  CHECK(rel_err(p.coeff(1), d1) < 1e-7);
  CHECK(rel_err(p.coeff(2), d2 / 2.0) < 1e-5);
}

TEST_CASE("residues of simple jets") {
  CHECK(eulerg::residue(eulerg::monomial_jet(0.0, -1, 3)) == Cplx(1.0));
  CHECK(eulerg::residue(eulerg::unit_jet(5.0, 0.0, 3)) == Cplx{});
}

TEST_CASE("leading residue of the Mellin-Barnes integrand") {
  // Gamma(b - w) zeta^w has residue -zeta^b at w = b.
  testing::Draw d(18);
  for (int trial = 0; trial < 20; ++trial) {
    const Cplx b = d.box(2.0, 1.0);
    Cplx zeta = d.box(2.0, 2.0);
    if (std::abs(zeta) < 0.1) zeta += 0.5;
    const int k = eulerg::default_jet_order(1);
    const LaurentJet prod = eulerg::jet_mul(eulerg::gamma_jet(b, b, k), eulerg::power_jet(zeta, b, k));
    const Cplx want = -std::exp(b * std::log(zeta));
    CHECK(rel_err(eulerg::residue(prod), want) < 1e-13);
  }
}

TEST_CASE("jet errors") {
  CHECK(kind_of([] { eulerg::jet_mul(eulerg::unit_jet(1.0, 0.0, 2), eulerg::unit_jet(1.0, 1.0, 2)); }) ==
        ErrorKind::CenterMismatch);
  CHECK(kind_of([] { eulerg::jet_add(eulerg::unit_jet(1.0, 0.0, 2), eulerg::unit_jet(1.0, 0.5, 2)); }) ==
        ErrorKind::CenterMismatch);
  CHECK(kind_of([] { eulerg::jet_recip(eulerg::unit_jet(0.0, 0.0, 3)); }) == ErrorKind::ZeroJet);
  CHECK(kind_of([] { eulerg::power_jet(0.0, 0.0, 3); }) == ErrorKind::ZeroBase);
}
