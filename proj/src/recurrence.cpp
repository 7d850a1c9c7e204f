#include "dunkl/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/polyalg.hpp"

namespace dunkl {

double StateVector::norm() const noexcept {
  double s = 0.0;
  for (const cplx& v : values) s = std::max(s, std::abs(v));
  return s;
}

StateVector initial_state(int n) {
  return StateVector{0, std::vector<cplx>(static_cast<std::size_t>(2 * n), cplx(1.0))};
}

StateVector y_step(const StateVector& state, const ParameterK& param, const OrbitPairings& orbit) {
  const int n = orbit.n();
  if (state.n() != n) throw DomainError("state vector length does not match the group order");
  const cplx g = param.gamma();
  const double m1 = state.m + 1.0;

  std::vector<cplx> dy(static_cast<std::size_t>(2 * n));
  cplx sum_rot = 0.0;
  cplx sum_refl = 0.0;
  for (int j = 0; j < n; ++j) {
    dy[j] = orbit.rot[j] * state.values[j];
    dy[n + j] = orbit.refl[j] * state.values[n + j];
    sum_rot += dy[j];
    sum_refl += dy[n + j];
  }
  const cplx along_w = g / (2.0 * n * m1) * (sum_rot + sum_refl);
  const cplx along_ws = g / (2.0 * n * (m1 + 2.0 * g)) * (sum_rot - sum_refl);

  StateVector out{state.m + 1, std::move(dy)};
  for (int j = 0; j < n; ++j) {
    out.values[j] += along_w - along_ws;
    out.values[n + j] += along_w + along_ws;
  }
  return out;
}

std::vector<cplx> em_sequence(const ParameterK& param, const OrbitPairings& orbit, int max_m) {
  if (max_m < 0) throw DomainError("maximal degree must be nonnegative");
  if (max_m > kMaxUnscaledDegree) {
    throw RangeError("em_sequence is limited to degree " + std::to_string(kMaxUnscaledDegree) +
                     " (requested " + std::to_string(max_m) + "); reduce the maximal degree");
  }
  param.require_regular();
  const Pochhammer poch(param.gamma(), max_m);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(max_m) + 1);
  StateVector y = initial_state(orbit.n());
  out.push_back(1.0);
  for (int m = 1; m <= max_m; ++m) {
    y = y_step(y, param, orbit);
    const cplx e = y.values.front() / poch[m];
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
      throw RangeError("E_" + std::to_string(m) + " is not representable; reduce the maximal degree");
    out.push_back(e);
  }
  return out;
}

std::vector<cplx> em_sequence(const DihedralGroup& group, const ParameterK& param,
                              const PlanePoint& x, const PlanePoint& y, int max_m) {
  return em_sequence(param, orbit_pairings(group, x, y), max_m);
}

ComponentStream::ComponentStream(const ParameterK& param, const OrbitPairings& orbit)
    : param_(param), orbit_(orbit), state_(initial_state(orbit.n())) {
  param_.require_regular();
}

cplx ComponentStream::next() {
  const double m1 = state_.m + 1.0;
  state_ = y_step(state_, param_, orbit_);
  const cplx scale = 1.0 / (m1 + param_.gamma());
  for (cplx& v : state_.values) v *= scale;
  return current();
}

cplx em_scalar_step(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                     const PlanePoint& y, int m) {
  if (m < 0) throw DomainError("degree must be nonnegative");
  const HCoefficients h = h_coefficients(param, m + 1);
  cplx out = 0.0;
  for (int j = 0; j < group.n(); ++j) {
    const PlanePoint rx = group.act(GroupElement::rotation(j), x);
    const PlanePoint sx = group.act(GroupElement::reflection(j), x);
    const cplx e_rot = em_sequence(group, param, rx, y, m).back();
    const cplx e_refl = em_sequence(group, param, sx, y, m).back();
    out += (j == 0 ? h.a0 : h.aj) * pairing(rx, y) * e_rot;
    out += h.b * pairing(sx, y) * e_refl;
  }
  return out;
}

CoeffMatrices coeff_matrix_norms(const ParameterK& param, int m) {
  if (m < 0) throw DomainError("degree must be nonnegative");
  param.require_regular();
  const cplx g = param.gamma();
  const double n = param.n();
  const double m1 = m + 1.0;
  const cplx t = g * g / (n * m1 * (m1 + g) * (m1 + 2.0 * g));
  CoeffMatrices out;
  out.m = m;
  out.a_norm = std::abs(1.0 / (m1 + g) + t) + (n - 1.0) * std::abs(t);
  out.b_norm = n * std::abs(g / (n * m1 * (m1 + 2.0 * g)));
  out.step_bound = std::abs(m1 + g) * (out.a_norm + out.b_norm);
  return out;
}

}  // namespace dunkl
