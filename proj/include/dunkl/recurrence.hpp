#pragma once

#include <vector>

#include "dunkl/dihedral.hpp"
#include "dunkl/parameter.hpp"

namespace dunkl {

/// Y_m = (1+gamma)_m [E_m(r^j x, y) for j ; E_m(r^j sigma x, y) for j], in C^{2n}.
struct StateVector {
  int m = 0;
  std::vector<cplx> values;

  int n() const noexcept { return static_cast<int>(values.size()) / 2; }
  /// max-modulus norm
  double norm() const noexcept;
};

/// Y_0 = W, the all-ones vector of length 2n.
StateVector initial_state(int n);

/// One step Y_m -> Y_{m+1}:
///   Y' = D Y + gamma/(2n(m+1)) <DY, W> W - gamma/(2n(m+1+2 gamma)) <DY, W_s> W_s,
/// with D the diagonal of all 2n orbit pairings and bilinear inner products.
StateVector y_step(const StateVector& state, const ParameterK& param, const OrbitPairings& orbit);

/// Degree cap of em_sequence: Y_m is carried unscaled and is never renormalised.
inline constexpr int kMaxUnscaledDegree = 200;

/// E_0..E_M(x, y) from the vector recurrence, with the Pochhammer division
/// deferred to the end. Throws RangeError for M > kMaxUnscaledDegree or on overflow.
std::vector<cplx> em_sequence(const ParameterK& param, const OrbitPairings& orbit, int max_m);
std::vector<cplx> em_sequence(const DihedralGroup& group, const ParameterK& param,
                              const PlanePoint& x, const PlanePoint& y, int max_m);

/// Streams E_0, E_1, ... by stepping the normalised state Y_m / (1+gamma)_m.
/// Used where many terms are needed (kernel sums) and (1+gamma)_m would overflow.
class ComponentStream {
 public:
  ComponentStream(const ParameterK& param, const OrbitPairings& orbit);

  int degree() const noexcept { return state_.m; }
  cplx current() const noexcept { return state_.values.front(); }
  /// Advance to the next degree and return its component.
  cplx next();

 private:
  ParameterK param_;
  OrbitPairings orbit_;
  StateVector state_;
};

/// E_{m+1}(x, y) assembled from the scalar relation
///   E_{m+1}(x,y) = sum_j a_j(m+1) <r^j x,y> E_m(r^j x,y) + sum_j b_j(m+1) <r^j sigma x,y> E_m(r^j sigma x,y),
/// with each E_m(g x, y) taken from an independent em_sequence run.
cplx em_scalar_step(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                     const PlanePoint& y, int m);

/// Max-row-sum norms of the block coefficient matrices of the X_m recurrence.
struct CoeffMatrices {
  int m = 0;
  double a_norm = 0.0;      // |1/(m+1+g) + t| + (n-1)|t|, t = g^2/(n(m+1)(m+1+g)(m+1+2g))
  double b_norm = 0.0;      // n |g/(n(m+1)(m+1+2g))|
  double step_bound = 0.0;  // |m+1+g| (a_norm + b_norm): ||Y_{m+1}|| <= step_bound a ||Y_m||
};

CoeffMatrices coeff_matrix_norms(const ParameterK& param, int m);

}  // namespace dunkl
