#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/recurrence.hpp"
#include "dunkl/series.hpp"
#include "support/helpers.hpp"

using namespace dunkl;

namespace {

double vec_norm(const CVec2& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

SamplingOptions sigma_only() {
  SamplingOptions o;
  o.sigma_fraction = 1.0;
  return o;
}

// SeriesData holding the product-form solution for sigma-invariant input:
// A_p = ((2/k) f_p, 0) with f the Taylor series of prod (1 - z c_i)^{-k}.
SeriesData product_form(cplx k, const std::vector<cplx>& c, int order) {
  const auto f = oracle::product_series(k, c, order);
  SeriesData s;
  s.order = order;
  s.A.resize(order + 1);
  s.phi.resize(order + 1);
  for (int p = 0; p <= order; ++p) {
    s.A[p] = {2.0 / k * f[p], 0.0};
    s.phi[p] = s.A[p][0];
  }
  return s;
}

}  // namespace

TEST_CASE("B_p: zero cases and the n = 2 example") {
  const ParameterK p(3, cplx(0.4, 0.2));
  for (const Instance& in : instances(41, 20, 2.0)) {
    const ParameterK q(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const CMat2 b0 = b_matrix(q, o, 0);
    for (const cplx& e : b0) CHECK(std::abs(e) <= 1e-12 * std::abs(q.gamma()) * std::max(o.a_bound, 1.0));
  }
  const OrbitPairings zero = orbit_pairings(DihedralGroup(3), {0.0, 0.0}, {1.0, 2.0});
  for (int k = 0; k < 6; ++k)
    for (const cplx& e : b_matrix(p, zero, k)) CHECK(e == cplx(0.0));

  const ParameterK p2(2, cplx(0.3, -0.1));
  const CMat2 b1 = b_matrix(p2, orbit_pairings(DihedralGroup(2), {1.0, 0.0}, {1.0, 0.0}), 1);
  const cplx g = p2.gamma();
  CHECK(std::abs(b1[0] - g) < 1e-15);
  CHECK(std::abs(b1[1]) < 1e-15);
  CHECK(std::abs(b1[2]) < 1e-15);
  CHECK(std::abs(b1[3] + g) < 1e-15);
}

TEST_CASE("B_p matches the power sums of the orbit pairings") {
  for (const Instance& in : instances(42, 20, 2.0)) {
    const ParameterK q(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const auto rot = oracle::rot_pairings(in.n, to_vec(in.x), to_vec(in.y));
    const auto refl = oracle::refl_pairings(in.n, to_vec(in.x), to_vec(in.y));
    for (int p = 0; p <= 12; ++p) {
      cplx sp = 0.0, sm = 0.0;
      for (int i = 0; i < in.n; ++i) {
        sp += std::pow(rot[i], p + 1) + std::pow(refl[i], p + 1);
        sm += std::pow(rot[i], p + 1) - std::pow(refl[i], p + 1);
      }
      const cplx c = q.gamma() / (2.0 * in.n);
      const CMat2 ref{c * sp, -c * sm, c * sm, -c * sp};
      const CMat2 b = b_matrix(q, o, p);
      const double scale = std::abs(c) * 2.0 * in.n * std::pow(o.a_bound, p + 1) + 1e-300;
      for (int e = 0; e < 4; ++e) CHECK(std::abs(b[e] - ref[e]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("A_0 and A_1 are fixed") {
  for (const Instance& in : instances(43, 30, 2.0)) {
    const ParameterK q(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const SeriesData s = a_coeffs(q, o, 10);
    CHECK(s.order == 10);
    CHECK(s.A.size() == 11u);
    CHECK(s.B.size() == 10u);
    CHECK(s.A[0][0] == 2.0 * static_cast<double>(in.n) / q.gamma());
    CHECK(s.A[0][1] == cplx(0.0));
    CHECK(vec_norm(s.A[1]) <= 1e-12 * std::abs(s.A[0][0]) * std::max(o.a_bound, 1.0));
    CHECK(s.phi[0] == s.A[0][0]);
    for (int p = 1; p <= 10; ++p) CHECK(s.phi[p] == s.A[p][0] - s.A[p][1]);
  }
  CHECK_THROWS_AS(a_coeffs(ParameterK(3, -0.5), orbit_pairings(DihedralGroup(3), {1.0, 0.0}, {1.0, 0.0}), 5),
                  DomainError);
}

TEST_CASE("sigma-invariant coefficients match the product series") {
  for (const Instance& in : instances(44, 20, 2.0, sigma_only())) {
    const ParameterK q(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const SeriesData s = a_coeffs(q, o, 40);
    const auto f = oracle::product_series(in.k, oracle::rot_pairings(in.n, to_vec(in.x), to_vec(in.y)), 40);
    for (int p = 1; p <= 40; ++p) {
      const double scale = std::abs(s.A[0][0]) * std::pow(std::max(o.a_bound, 1e-3), p);
      CHECK(std::abs(s.A[p][0] - 2.0 / in.k * f[p]) <= 1e-10 * scale);
      CHECK(std::abs(s.A[p][1]) <= 1e-10 * scale);
    }
    const auto coeffs = phi_sigma_coefficients(q, o, 40);
    for (int p = 0; p <= 40; ++p) {
      const double scale = std::abs(s.A[0][0]) * std::pow(std::max(o.a_bound, 1e-3), p);
      CHECK(std::abs(coeffs[p] - s.phi[p]) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("g and g_s") {
  for (const Instance& in : instances(45, 20, 2.0)) {
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const auto [g0, gs0] = g_values(o, 0.0);
    CHECK(std::abs(g0) <= 1e-13 * (1.0 + o.a_bound));
    CHECK(std::abs(gs0) <= 1e-13 * (1.0 + o.a_bound));
    const cplx z = std::polar(0.3 / std::max(o.a_bound, 1e-3), 0.7);
    const auto [g, gs] = g_values(o, z);
    cplx rg = 0.0, rs = 0.0;
    for (int i = 0; i < in.n; ++i) {
      rg += o.rot[i] / (1.0 - z * o.rot[i]) + o.refl[i] / (1.0 - z * o.refl[i]);
      rs += o.rot[i] / (1.0 - z * o.rot[i]) - o.refl[i] / (1.0 - z * o.refl[i]);
    }
    CHECK(std::abs(g - rg) <= 1e-12 * (1.0 + std::abs(rg)));
    CHECK(std::abs(gs - rs) <= 1e-12 * (1.0 + std::abs(rs)));
  }
  const OrbitPairings zero = orbit_pairings(DihedralGroup(4), {0.0, 0.0}, {1.0, 1.0});
  const auto [a, b] = g_values(zero, cplx(0.3, 0.4));
  CHECK(a == cplx(0.0));
  CHECK(b == cplx(0.0));
  const OrbitPairings one = orbit_pairings(DihedralGroup(2), {1.0, 0.0}, {1.0, 0.0});
  CHECK_THROWS_AS(g_values(one, 1.0), DomainError);
}

TEST_CASE("g and g_s are symmetric in x and y") {
  SamplingOptions opts;
  opts.complex_y_fraction = 0.0;
  oracle::Rng rng(46);
  for (const Instance& in : instances(46, 20, 2.0, opts)) {
    const DihedralGroup grp(in.n);
    const OrbitPairings xy = orbit_pairings(grp, in.x, in.y);
    const OrbitPairings yx = orbit_pairings(grp, in.y, in.x);
    const cplx z = rng.complex(0.4 / std::max(xy.a_bound, 1e-3));
    const auto [g1, s1] = g_values(xy, z);
    const auto [g2, s2] = g_values(yx, z);
    CHECK(std::abs(g1 - g2) <= 1e-12 * (1.0 + std::abs(g1)));
    CHECK(std::abs(s1 - s2) <= 1e-12 * (1.0 + std::abs(s1)));
  }
}

TEST_CASE("truncated Q solves the differential system") {
  for (const Instance& in : instances(47, 25, 2.0)) {
    const ParameterK q(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const double d = delta_effective(q).delta_effective;
    const SeriesData s = a_coeffs(q, o, 80);
    for (int j = 0; j < 8; ++j) {
      const cplx z = std::polar(1.0 / (4.0 * d * o.a_bound), 2.0 * std::numbers::pi * (j + 0.5) / 8.0);
      CHECK(residual_check(q, o, s, z) <= 1e-8);
    }
  }
}

TEST_CASE("product form solves the system for sigma-invariant input") {
  for (const Instance& in : instances(48, 15, 2.0, sigma_only())) {
    const ParameterK q(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const double d = delta_effective(q).delta_effective;
    const SeriesData s = product_form(in.k, o.rot, 80);
    for (int j = 0; j < 8; ++j) {
      const cplx z = std::polar(1.0 / (4.0 * d * o.a_bound), 2.0 * std::numbers::pi * j / 8.0 + 0.1);
      CHECK(residual_check(q, o, s, z) <= 1e-8);
    }
  }
}

TEST_CASE("x = 0 gives the trivial solution") {
  const ParameterK q(5, cplx(0.3, 0.3));
  const OrbitPairings o = orbit_pairings(DihedralGroup(5), {0.0, 0.0}, {1.0, -1.0});
  const SeriesData s = a_coeffs(q, o, 20);
  for (int p = 1; p <= 20; ++p) CHECK(vec_norm(s.A[p]) == 0.0);
  CHECK(residual_check(q, o, s, cplx(0.5, 0.1)) == 0.0);
  CHECK(s.phi_at(cplx(0.2, 0.9)) == s.phi[0]);
}

TEST_CASE("any other start breaks the system") {
  for (const Instance& in : instances(49, 10, 2.0)) {
    const ParameterK q(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const double d = delta_effective(q).delta_effective;
    for (const CVec2& a1 : {CVec2{1.0, 0.0}, CVec2{0.0, 0.5}, CVec2{cplx(0.1, 0.1), -0.2}}) {
      const SeriesData s = a_coeffs_with_a1(q, o, 80, a1);
      double worst = 0.0;
      for (int j = 0; j < 8; ++j) {
        const cplx z = std::polar(1.0 / (4.0 * d * o.a_bound), 2.0 * std::numbers::pi * j / 8.0);
        worst = std::max(worst, residual_check(q, o, s, z));
      }
      CHECK(worst > 1e-3);
    }
  }
}

TEST_CASE("coefficient growth bound") {
  for (const Instance& in : instances(50, 40, 2.0)) {
    const ParameterK q(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const double d = delta_effective(q).delta_effective;
    const SeriesData s = a_coeffs(q, o, 80);
    const double lead = 2.0 * in.n / std::abs(q.gamma());
    for (int p = 0; p <= 80; ++p) CHECK(vec_norm(s.A[p]) <= lead * std::pow(d * o.a_bound, p) * (1.0 + 1e-9));
  }
}

TEST_CASE("Phi is bounded on the half disk") {
  for (const Instance& in : instances(51, 20, 2.0)) {
    const ParameterK q(in.n, in.k);
    const OrbitPairings o = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const double d = delta_effective(q).delta_effective;
    const SeriesData s = a_coeffs(q, o, 80);
    const double lead = 2.0 * in.n / std::abs(q.gamma());
    for (double r : {0.1, 0.25, 0.5})
      for (int j = 0; j < 6; ++j) {
        const double rad = r / (d * o.a_bound);
        const cplx z = std::polar(rad, j * 1.1);
        CHECK(std::abs(s.phi_at(z)) <= 2.0 * lead / (1.0 - d * o.a_bound * rad) + 1e-12);
      }
  }
}

TEST_CASE("series coefficients are symmetric in x and y") {
  SamplingOptions opts;
  opts.complex_y_fraction = 0.0;
  for (const Instance& in : instances(52, 20, 2.0, opts)) {
    const ParameterK q(in.n, in.k);
    const DihedralGroup g(in.n);
    const SeriesData a = a_coeffs(q, orbit_pairings(g, in.x, in.y), 40);
    const SeriesData b = a_coeffs(q, orbit_pairings(g, in.y, in.x), 40);
    const double a_bound = orbit_pairings(g, in.x, in.y).a_bound;
    // many A_p vanish by symmetry, so entries are compared on the scale (2n/|gamma|) a^p
    for (int p = 0; p <= 40; ++p) {
      const double scale = std::abs(a.A[0][0]) * std::pow(a_bound, p);
      for (int i = 0; i < 2; ++i) CHECK(std::abs(a.A[p][i] - b.A[p][i]) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("generating series gives the components") {
  for (const Instance& in : instances(53, 30, 2.0)) {
    const ParameterK q(in.n, in.k);
    const DihedralGroup g(in.n);
    const OrbitPairings o = orbit_pairings(g, in.x, in.y);
    const SeriesData s = a_coeffs(q, o, 30);
    const cplx xy = pairing(in.x, in.y);
    CHECK(std::abs(em_genseries(q, o, xy, s, 0) - 1.0) < 1e-14);
    CHECK(oracle::rel(em_genseries(q, o, xy, s, 1), xy / (1.0 + q.gamma())) < 1e-13);
    const auto rec = em_sequence(g, q, in.x, in.y, 30);
    for (int m = 0; m <= 30; ++m) CHECK(oracle::rel(em_genseries(q, o, xy, s, m), rec[m]) <= 1e-9);
    CHECK_THROWS_AS(em_genseries(q, o, xy, s, 31), RangeError);
  }
}

TEST_CASE("closed form of Phi for sigma-invariant input") {
  const ParameterK q(2, cplx(0.7, 0.2));
  const PlanePoint y(cplx(0.8, 0.3), -0.6);
  const OrbitPairings o = orbit_pairings(DihedralGroup(2), {1.0, 0.0}, y);
  REQUIRE(is_sigma_invariant(o));
  CHECK(oracle::rel(phi_sigma_invariant(q, o, 0.0), 2.0 / q.k()) < 1e-15);
  for (const cplx z : {cplx(0.3, 0.1), cplx(-0.2, 0.5), cplx(0.0, -0.6)}) {
    const cplx ref = 2.0 / q.k() * std::pow(1.0 - z * z * y.c0 * y.c0, -q.k());
    CHECK(oracle::rel(phi_sigma_invariant(q, o, z), ref) < 1e-13);
  }
  const OrbitPairings generic = orbit_pairings(DihedralGroup(3), {0.3, 0.7}, {0.9, -0.2});
  CHECK_FALSE(is_sigma_invariant(generic));
  CHECK_THROWS_AS(phi_sigma_invariant(ParameterK(3, 0.5), generic, 0.1), DomainError);

  for (const Instance& in : instances(54, 15, 2.0, sigma_only())) {
    const ParameterK p(in.n, in.k);
    const OrbitPairings orb = orbit_pairings(DihedralGroup(in.n), in.x, in.y);
    const SeriesData s = a_coeffs(p, orb, 80);
    const cplx z = std::polar(0.25 / orb.a_bound, 0.4);
    CHECK(oracle::rel(phi_sigma_invariant(p, orb, z), s.phi_at(z)) < 1e-11);
  }
}

TEST_CASE("closed form of the components") {
  const DihedralGroup g2(2);
  const ParameterK p2(2, 0.5);
  const auto rec = em_sequence(g2, p2, {1.0, 0.0}, {1.0, 1.0}, 4);
  CHECK(oracle::rel(em_closed_sigma(g2, p2, {1.0, 0.0}, {1.0, 1.0}, 4), rec[4]) <= 1e-10);
  CHECK(em_closed_sigma(g2, p2, {1.0, 0.0}, {1.0, 1.0}, 0) == cplx(1.0));
  CHECK_THROWS_AS(em_closed_sigma(DihedralGroup(3), ParameterK(3, 0.5), {0.3, 0.7}, {0.9, -0.2}, 2),
                  DomainError);

  for (const Instance& in : instances(55, 20, 2.0, sigma_only())) {
    const DihedralGroup g(in.n);
    const ParameterK p(in.n, in.k);
    const OrbitPairings o = orbit_pairings(g, in.x, in.y);
    const cplx xy = pairing(in.x, in.y);
    CHECK(oracle::rel(em_closed_sigma(g, p, in.x, in.y, 1), xy / (1.0 + p.gamma())) < 1e-13);
    const auto seq = em_closed_sigma_sequence(p, o, 10);
    for (int m = 0; m <= 10; ++m) {
      const cplx ref = oracle::closed_sigma_em(in.n, in.k, o.rot, xy, m);
      CHECK(oracle::rel(em_closed_sigma(g, p, in.x, in.y, m), ref) <= 1e-11);
      CHECK(oracle::rel(seq[m], ref) <= 1e-11);
    }
  }
}

TEST_CASE("truncation order and radius guard") {
  const RadiusGuard r = RadiusGuard::make(2.0, 3.0);
  CHECK(r.rho_default * r.delta * r.a_bound == doctest::Approx(0.5));
  CHECK_FALSE(r.unbounded());
  const RadiusGuard z = RadiusGuard::make(0.0, 3.0);
  CHECK(z.unbounded());
  CHECK(std::isinf(z.rho_default));

  const ParameterK p(3, 0.5);
  CHECK(truncation_order(p, 0.0, 1.0, 1.0, 1e-14) == 40);
  CHECK(truncation_order(p, 1.0, 1.0, 0.1, 1e-14, 30) == 60);
  const int order = truncation_order(p, 2.0, 1.5, 1.0 / 6.0, 1e-14);
  const double s = 0.5;
  CHECK(2.0 * 3.0 / 1.5 * std::pow(s, order + 1) / (1.0 - s) < 1e-14);
  CHECK(2.0 * 3.0 / 1.5 * std::pow(s, order / 2 + 1) / (1.0 - s) >= 1e-14);
  CHECK_THROWS_AS(truncation_order(p, 2.0, 1.5, 1.0, 1e-14), DomainError);
}
