#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/dihedral.hpp"
#include "dunkl/parameter.hpp"
#include "dunkl/series.hpp"

namespace dunkl {

/// Radius-safety constant. delta_series bounds the growth of the series
/// coefficients A_p; delta_matrix bounds one step of the Y_m recurrence.
struct DeltaConstant {
  double delta_series = 0.0;   // 2|gamma| sup_{p>=1} max(1, p/|p+2gamma|)
  double delta_matrix = 0.0;   // sup_m |m+1+gamma| (||A_m|| + ||B_m||)
  double delta_effective = 1.0;
};

DeltaConstant delta_effective(const ParameterK& param);

enum class KernelMethod { series_sum, integral, sigma_closed, exp_shortcut };
const char* to_string(KernelMethod method) noexcept;

struct KernelResult {
  cplx value;
  KernelMethod method = KernelMethod::series_sum;
  int terms_used = 0;   // components summed, or K evaluations (integral)
  int nodes_used = 0;   // contour nodes (integral only)
  double tail_estimate = 0.0;
};

inline constexpr int kMaxKernelTerms = 500;
inline constexpr int kMaxContourNodes = 1 << 14;

/// Upper bound on sum_{m > M} (e^2/2)(m+2)^2 s^m / |(1+gamma)_m|, the tail of the
/// component estimate with s = delta a. Summed term by term until the term
/// ratio drops below 1/2 for good, then closed geometrically.
double component_tail_bound(cplx gamma, double s, int max_m);

/// E_k(x, y) = sum_m E_m(x, y), truncated once the certified tail is below tol.
/// k = 0 returns exp(<x,y>); a(x,y) = 0 returns 1.
KernelResult ek_series(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                       const PlanePoint& y, double tol);

/// Same sum, but over the closed-form components (x or y fixed by sigma).
KernelResult ek_sigma_closed(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                             const PlanePoint& y, double tol);

/// Trapezoidal discretisation of
///   K(t) = (gamma^2/2n) (1/2 pi i) \oint_{|z|=rho} Phi(z) e^{t/z} / (z (1 - z<x,y>)) dz
/// with the contour samples of Phi/(1 - z<x,y>) computed once. The factor e^{t/z}
/// reaches e^{1/rho} on the contour, so the samples and the sum are carried in
/// MPFR with enough extra bits whenever double precision cannot reach `target`.
class ContourKernel {
 public:
  ContourKernel(const ParameterK& param, const OrbitPairings& orbit, const SeriesData& series,
                double rho, int nodes, double target = 1e-14);
  cplx operator()(double t) const;
  // sum of term moduli; sets the rounding floor of operator()
  double magnitude(double t) const;
  int nodes() const noexcept;
  int precision_bits() const noexcept;  // 53 when the sum runs in double

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

cplx kernel_K(const ParameterK& param, const OrbitPairings& orbit, const SeriesData& series, double t,
              double rho, int nodes);

struct IntegralOptions {
  double rho_scale = 1.0;  // contour radius = rho_scale * rho_default
  int min_nodes = 32;
};

/// E_k = \int_0^1 (1-t)^{gamma-1} K(t) dt for Re(gamma) > 0, via s = 1 - t = u^q,
/// q = max(1, ceil(1/Re gamma)), and Gauss-Legendre panels graded towards u = 0.
KernelResult ek_integral(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                         const PlanePoint& y, double tol, const IntegralOptions& options = {});

/// |E_m| against (e^2/2)(m+2)^2 (delta a)^m / |(1+gamma)_m| for m = 1..M.
struct EmBoundReport {
  double delta = 1.0;
  double a_bound = 0.0;
  std::vector<double> ratios;  // index m - 1
  double max_ratio = 0.0;
  int argmax = 0;
  bool holds(double slack = 1e-9) const noexcept { return max_ratio <= 1.0 + slack; }
};

EmBoundReport check_em_bound(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                             const PlanePoint& y, int max_m, int nu);

/// C(n, k, nu) = (nu+2)! sup_m (e^2/2)(m+2)^2 m! / (|(1+gamma)_m| (m+1)^{nu+2}),
/// the constant making |E_k| <= C (delta a + 1)^{nu+2} e^{delta a}.
double ek_bound_constant(const ParameterK& param, int nu);

struct EkBoundReport {
  double sup_ratio = 0.0;
  double constant = 0.0;
  std::size_t points = 0;
  std::vector<double> ratios;
  bool holds() const noexcept { return sup_ratio <= constant; }
};

EkBoundReport check_ek_bound(const DihedralGroup& group, const ParameterK& param,
                             const std::vector<std::pair<PlanePoint, PlanePoint>>& grid, int nu);

}  // namespace dunkl
