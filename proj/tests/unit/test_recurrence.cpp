#include <doctest.h>

#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/polyalg.hpp"
#include "dunkl/recurrence.hpp"
#include "dunkl/series.hpp"
#include "support/helpers.hpp"

using namespace dunkl;

TEST_CASE("first step gives D W") {
  for (const Instance& in : instances(31, 10, 2.0)) {
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const StateVector y1 = y_step(initial_state(in.n), ParameterK(in.n, in.k), o);
    const auto d = o.big_diag();
    CHECK(y1.m == 1);
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(std::abs(y1.values[i] - d[i]) <= 1e-14 * (1.0 + o.a_bound));
  }
}

TEST_CASE("x = 0 leaves only the constant component") {
  const ParameterK p(4, cplx(0.3, 0.1));
  const OrbitPairings o = orbit_pairings(DihedralGroup(4), {0.0, 0.0}, {1.0, -2.0});
  StateVector y = initial_state(4);
  for (int m = 1; m <= 5; ++m) {
    y = y_step(y, p, o);
    CHECK(y.norm() == 0.0);
  }
  const auto e = em_sequence(DihedralGroup(4), p, {0.0, 0.0}, {1.0, -2.0}, 6);
  CHECK(e[0] == cplx(1.0));
  for (int m = 1; m <= 6; ++m) CHECK(e[m] == cplx(0.0));
}

TEST_CASE("E_0 = 1 and E_1 = <x,y>/(1+gamma)") {
  for (const Instance& in : instances(32, 40, 2.0)) {
    const ParameterK p(in.n, in.k);
    const auto e = em_sequence(DihedralGroup(in.n), p, in.x, in.y, 1);
    CHECK(e[0] == cplx(1.0));
    CHECK(oracle::rel(e[1], pairing(in.x, in.y) / (1.0 + p.gamma())) <= 1e-13);
  }
}

TEST_CASE("second component for n = 2, k = 1/2 by hand expansion") {
  const int n = 2;
  const cplx k = 0.5, g = 1.0;
  const oracle::Vec x{1.0, 0.0}, y{1.0, 1.0};
  // a_j(2), b_j(2) written out, with E_1(hx, y) = <hx, y>/(1+g)
  const cplx t = g * g / (n * 2.0 * (2.0 + g) * (2.0 + 2.0 * g));
  const cplx a0 = 1.0 / (2.0 + g) + t, aj = t, b = g / (n * 2.0 * (2.0 + 2.0 * g));
  const auto rot = oracle::rot_pairings(n, x, y);
  const auto refl = oracle::refl_pairings(n, x, y);
  cplx hand = 0.0;
  for (int j = 0; j < n; ++j) hand += (j == 0 ? a0 : aj) * rot[j] * rot[j] + b * refl[j] * refl[j];
  hand /= 1.0 + g;

  const DihedralGroup group(n);
  const ParameterK p(n, k);
  const cplx e2 = em_sequence(group, p, {1.0, 0.0}, {1.0, 1.0}, 2)[2];
  CHECK(oracle::rel(e2, hand) < 1e-14);
  CHECK(oracle::rel(e2, oracle_em(group, p, {1.0, 0.0}, {1.0, 1.0}, 2)) < 1e-14);
  CHECK(oracle::rel(e2, oracle::product_em_n2(k, x, y, 2)) < 1e-14);

  // one full step of the vector recurrence, entry by entry
  const OrbitPairings o = orbit_pairings(group, {1.0, 0.0}, {1.0, 1.0});
  const StateVector y2 = y_step(y_step(initial_state(n), p, o), p, o);
  for (int j = 0; j < n; ++j) {
    const PlanePoint rx = group.act(GroupElement::rotation(j), {1.0, 0.0});
    const PlanePoint sx = group.act(GroupElement::reflection(j), {1.0, 0.0});
    CHECK(oracle::rel(y2.values[j], (1.0 + g) * (2.0 + g) * oracle_em(group, p, rx, {1.0, 1.0}, 2)) < 1e-14);
    CHECK(oracle::rel(y2.values[n + j], (1.0 + g) * (2.0 + g) * oracle_em(group, p, sx, {1.0, 1.0}, 2)) < 1e-14);
  }
}

TEST_CASE("scalar relation between consecutive components") {
  for (const Instance& in : instances(33, 15, 2.0)) {
    const DihedralGroup g(in.n);
    const ParameterK p(in.n, in.k);
    const auto e = em_sequence(g, p, in.x, in.y, 21);
    CHECK(oracle::rel(em_scalar_step(g, p, in.x, in.y, 0), e[1]) <= 1e-13);
    for (int m = 1; m <= 20; ++m) CHECK(oracle::rel(em_scalar_step(g, p, in.x, in.y, m), e[m + 1]) <= 1e-10);
  }
}

TEST_CASE("recurrence agrees with the symbolic construction") {
  for (const Instance& in : instances(34, 25, 2.0)) {
    const DihedralGroup g(in.n);
    const ParameterK p(in.n, in.k);
    const auto rec = em_sequence(g, p, in.x, in.y, 20);
    const auto ref = oracle_em_sequence(g, p, in.x, in.y, 20);
    for (int m = 0; m <= 20; ++m) CHECK(oracle::rel(rec[m], ref[m]) <= 1e-9);
  }
}

TEST_CASE("sigma-fixed input agrees with the closed form") {
  SamplingOptions o;
  o.sigma_fraction = 1.0;
  for (const Instance& in : instances(35, 20, 2.0, o)) {
    const DihedralGroup g(in.n);
    const ParameterK p(in.n, in.k);
    const auto rec = em_sequence(g, p, in.x, in.y, 12);
    const OrbitPairings orb = orbit_pairings(g, in.x, in.y);
    REQUIRE(is_sigma_invariant(orb));
    for (int m = 0; m <= 12; ++m)
      CHECK(oracle::rel(rec[m], oracle::closed_sigma_em(in.n, in.k, orb.rot, orb.xy(), m)) <= 1e-10);
  }
}

TEST_CASE("swap symmetry for real arguments") {
  SamplingOptions o;
  o.complex_y_fraction = 0.0;
  for (const Instance& in : instances(36, 20, 2.0, o)) {
    const DihedralGroup g(in.n);
    const ParameterK p(in.n, in.k);
    const auto a = em_sequence(g, p, in.x, in.y, 30);
    const auto b = em_sequence(g, p, in.y, in.x, 30);
    for (int m = 0; m <= 30; ++m) CHECK(oracle::rel(a[m], b[m]) <= 1e-9);
  }
}

TEST_CASE("k = 0 reduces to the exponential series") {
  const auto e = em_sequence(DihedralGroup(3), ParameterK(3, 0.0), {0.4, 1.1}, {cplx(0.5, 0.2), -0.7}, 15);
  const cplx xy = pairing({0.4, 1.1}, {cplx(0.5, 0.2), -0.7});
  for (int m = 0; m <= 15; ++m) CHECK(oracle::rel(e[m], std::pow(xy, m) / oracle::factorial(m)) <= 1e-13);
}

TEST_CASE("coefficient matrix norms") {
  const CoeffMatrices c = coeff_matrix_norms(ParameterK(3, 1.0), 0);
  CHECK(c.b_norm == doctest::Approx(3.0 / 7.0).epsilon(1e-15));
  const CoeffMatrices z = coeff_matrix_norms(ParameterK(5, 0.0), 4);
  CHECK(z.b_norm == 0.0);
  CHECK(z.a_norm == doctest::Approx(1.0 / 5.0));
  const ParameterK p(4, 0.6);
  double prev_a = 1e300, prev_b = 1e300;
  for (int m : {10, 100, 1000, 100000}) {
    const CoeffMatrices cm = coeff_matrix_norms(p, m);
    CHECK(cm.a_norm < prev_a);
    CHECK(cm.b_norm < prev_b);
    prev_a = cm.a_norm;
    prev_b = cm.b_norm;
  }
  CHECK(prev_a < 1e-4);
  CHECK(prev_b < 1e-9);
}

TEST_CASE("growth guard holds at every step") {
  for (const Instance& in : instances(37, 25, 2.0)) {
    const ParameterK p(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    StateVector y = initial_state(in.n);
    for (int m = 0; m < 60; ++m) {
      const StateVector next = y_step(y, p, o);
      CHECK(next.norm() <= coeff_matrix_norms(p, m).step_bound * o.a_bound * y.norm() * (1.0 + 1e-12));
      y = next;
    }
  }
}

TEST_CASE("degree cap and the normalised stream") {
  const DihedralGroup g(3);
  const ParameterK p(3, cplx(0.4, 0.1));
  CHECK_THROWS_AS(em_sequence(g, p, {1.0, 0.0}, {0.5, 0.5}, kMaxUnscaledDegree + 1), RangeError);
  CHECK_THROWS_AS(em_sequence(g, p, {1.0, 0.0}, {0.5, 0.5}, -1), DomainError);
  CHECK_THROWS_AS(em_sequence(g, ParameterK(3, -0.5), {1.0, 0.0}, {0.5, 0.5}, 3), DomainError);

  const PlanePoint x(0.9, -0.4), y(cplx(0.3, 0.2), 1.1);
  const auto e = em_sequence(g, p, x, y, 150);
  ComponentStream s(p, orbit_pairings(g, x, y));
  CHECK(s.degree() == 0);
  CHECK(s.current() == cplx(1.0));
  for (int m = 1; m <= 150; ++m) {
    const cplx v = s.next();
    CHECK(s.degree() == m);
    CHECK(oracle::rel(v, e[m]) <= 1e-12);
  }
  for (int m = 151; m <= 400; ++m) {
    const cplx v = s.next();
    CHECK(std::isfinite(std::abs(v)));
  }
}
