#pragma once

#include <array>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "dunkl/dihedral.hpp"
#include "dunkl/parameter.hpp"

namespace dunkl {

using CMat2 = std::array<cplx, 4>;  // row-major 2x2
using CVec2 = std::array<cplx, 2>;

/// Power-series data of the vanishing-at-zero solution Q of the group
/// differential system, and of Phi = 2n/gamma + Q_1 - Q_2.
struct SeriesData {
  int order = 0;           // coefficients A_0..A_order are present
  std::vector<CMat2> B;    // B_0..B_{order-1}
  std::vector<CVec2> A;    // A_0..A_order, A_0 = (2n/gamma, 0)
  std::vector<cplx> phi;   // phi_0 = 2n/gamma, phi_p = A_p[0] - A_p[1]

  /// Truncated Phi(z).
  cplx phi_at(cplx z) const;
  /// Truncated Q(z) = sum_{p>=1} A_p z^p and its derivative.
  CVec2 q_at(cplx z) const;
  CVec2 q_derivative_at(cplx z) const;
};

/// Radius metadata: Phi and Q are expanded on |z| < 1/(delta a); the default
/// contour radius is half of that.
struct RadiusGuard {
  double a_bound = 0.0;
  double delta = 1.0;
  double rho_default = std::numeric_limits<double>::infinity();

  static RadiusGuard make(double a_bound, double delta);
  bool unbounded() const noexcept { return a_bound == 0.0; }
};

/// B_p = (gamma/2n) [[S+, -S-], [S-, -S+]] with
/// S+- = sum_i (<r^i x,y>^{p+1} +- <r^i sigma x,y>^{p+1}).
CMat2 b_matrix(const ParameterK& param, const OrbitPairings& orbit, int p);

/// A_0 = (2n/gamma, 0), A_p = diag(1/p, 1/(p+2gamma)) sum_{i<p} B_{p-i-1} A_i.
SeriesData a_coeffs(const ParameterK& param, const OrbitPairings& orbit, int max_order);

/// Same forward recurrence, but with A_1 forced to a given value. Only useful
/// to demonstrate that any other start breaks the differential system.
SeriesData a_coeffs_with_a1(const ParameterK& param, const OrbitPairings& orbit, int max_order,
                            const CVec2& a1);

/// (g(z), g_s(z)): sums of c/(1 - z c) over rotation pairings plus / minus
/// the same over reflection pairings.
std::pair<cplx, cplx> g_values(const OrbitPairings& orbit, cplx z);

/// Euclidean norm of Q' - (g, g_s) - M(z) Q for the truncated Q of `series`, where
/// M = [[c g, -c g_s], [c g_s, -(2 gamma/z + c g)]], c = gamma/2n.
double residual_check(const ParameterK& param, const OrbitPairings& orbit, const SeriesData& series,
                      cplx z);

/// E_m = (gamma/2n) sum_{j<=m} phi_j <x,y>^{m-j} / (1+gamma)_m.
cplx em_genseries(const ParameterK& param, const OrbitPairings& orbit, cplx xy,
                  const SeriesData& series, int m);

/// True when the rotation and reflection pairings agree as multisets, which
/// holds when x or y is fixed by sigma.
bool is_sigma_invariant(const OrbitPairings& orbit, double rel_tol = 1e-12);

/// Phi(z) = (2/k) prod_i (1 - z <r^i x,y>)^{-k}, principal branch.
cplx phi_sigma_invariant(const ParameterK& param, const OrbitPairings& orbit, cplx z);

/// Taylor coefficients of phi_sigma_invariant up to `order`, by convolving the
/// binomial series of the n factors.
std::vector<cplx> phi_sigma_coefficients(const ParameterK& param, const OrbitPairings& orbit, int order);

/// Closed form of E_m for sigma-invariant x or y:
///   E_m = 1/(1+gamma)_m sum_j [sum_{|nu|=j} prod_i (k)_{nu_i}/nu_i! <r^i x,y>^{nu_i}] <x,y>^{m-j}.
cplx em_closed_sigma(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                     const PlanePoint& y, int m);

/// Components E_0..E_M of the closed form, with the Pochhammer factor applied
/// incrementally so that large M does not overflow.
std::vector<cplx> em_closed_sigma_sequence(const ParameterK& param, const OrbitPairings& orbit, int max_m);

/// Truncation order for evaluating Phi on |z| = rho: starts at max(2m, 40) and
/// doubles until (2n/|gamma|) s^{P+1}/(1-s) < tol with s = delta a rho.
int truncation_order(const ParameterK& param, double a_bound, double delta, double rho, double tol,
                     int target_m = 0);

}  // namespace dunkl
