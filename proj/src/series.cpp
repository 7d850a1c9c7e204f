#include "dunkl/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

CVec2 mat_vec(const CMat2& b, const CVec2& v) {
  return {b[0] * v[0] + b[1] * v[1], b[2] * v[0] + b[3] * v[1]};
}

// Powers c^{p+1} of every orbit pairing, advanced one degree at a time.
class PowerSums {
 public:
  explicit PowerSums(const OrbitPairings& orbit) : rot_(orbit.rot), refl_(orbit.refl), base_(orbit) {}

  // Returns (S+, S-) for the current exponent, then raises it by one.
  std::pair<cplx, cplx> take() {
    cplx sr = 0.0;
    cplx sf = 0.0;
    for (std::size_t i = 0; i < rot_.size(); ++i) {
      sr += rot_[i];
      sf += refl_[i];
      rot_[i] *= base_.rot[i];
      refl_[i] *= base_.refl[i];
    }
    return {sr + sf, sr - sf};
  }

 private:
  std::vector<cplx> rot_;
  std::vector<cplx> refl_;
  const OrbitPairings& base_;
};

CMat2 assemble_b(cplx gamma, int n, const std::pair<cplx, cplx>& sums) {
  const cplx c = gamma / (2.0 * n);
  const auto [sp, sm] = sums;
  return {c * sp, -c * sm, c * sm, -c * sp};
}

SeriesData forward(const ParameterK& param, const OrbitPairings& orbit, int max_order,
                   const std::optional<CVec2>& a1) {
  if (max_order < 0) throw DomainError("truncation order must be nonnegative");
  param.require_series();
  const int n = orbit.n();
  const cplx g = param.gamma();

  SeriesData s;
  s.order = max_order;
  s.A.push_back({2.0 * n / g, 0.0});
  PowerSums sums(orbit);
  for (int p = 0; p < max_order; ++p) s.B.push_back(assemble_b(g, n, sums.take()));

  for (int p = 1; p <= max_order; ++p) {
    const cplx shifted = static_cast<double>(p) + 2.0 * g;
    if (std::abs(shifted) <= ParameterK::kRegularityTol)
      throw DomainError("p + 2*gamma vanishes at p = " + std::to_string(p));
    if (p == 1 && a1) {
      s.A.push_back(*a1);
      continue;
    }
    CVec2 acc{0.0, 0.0};
    if (orbit.a_bound > 0.0) {
      for (int i = 0; i < p; ++i) {
        const CVec2 t = mat_vec(s.B[static_cast<std::size_t>(p - i - 1)], s.A[static_cast<std::size_t>(i)]);
        acc[0] += t[0];
        acc[1] += t[1];
      }
    }
    s.A.push_back({acc[0] / static_cast<double>(p), acc[1] / shifted});
  }

  s.phi.reserve(static_cast<std::size_t>(max_order) + 1);
  s.phi.push_back(2.0 * n / g);
  for (int p = 1; p <= max_order; ++p) s.phi.push_back(s.A[p][0] - s.A[p][1]);
  return s;
}

}  // namespace

cplx SeriesData::phi_at(cplx z) const {
  cplx acc = 0.0;
  for (int p = order; p >= 0; --p) acc = acc * z + phi[static_cast<std::size_t>(p)];
  return acc;
}

CVec2 SeriesData::q_at(cplx z) const {
  CVec2 acc{0.0, 0.0};
  for (int p = order; p >= 1; --p) {
    acc[0] = acc[0] * z + A[p][0];
    acc[1] = acc[1] * z + A[p][1];
  }
  return {acc[0] * z, acc[1] * z};
}

CVec2 SeriesData::q_derivative_at(cplx z) const {
  CVec2 acc{0.0, 0.0};
  for (int p = order; p >= 1; --p) {
    acc[0] = acc[0] * z + static_cast<double>(p) * A[p][0];
    acc[1] = acc[1] * z + static_cast<double>(p) * A[p][1];
  }
  return acc;
}

RadiusGuard RadiusGuard::make(double a_bound, double delta) {
  RadiusGuard r;
  r.a_bound = a_bound;
  r.delta = delta;
  r.rho_default = a_bound > 0.0 ? 1.0 / (2.0 * delta * a_bound) : std::numeric_limits<double>::infinity();
  return r;
}

CMat2 b_matrix(const ParameterK& param, const OrbitPairings& orbit, int p) {
  if (p < 0) throw DomainError("B_p needs p >= 0");
  cplx sr = 0.0;
  cplx sf = 0.0;
  for (int i = 0; i < orbit.n(); ++i) {
    sr += std::pow(orbit.rot[i], p + 1);
    sf += std::pow(orbit.refl[i], p + 1);
  }
  return assemble_b(param.gamma(), orbit.n(), {sr + sf, sr - sf});
}

SeriesData a_coeffs(const ParameterK& param, const OrbitPairings& orbit, int max_order) {
  return forward(param, orbit, max_order, std::nullopt);
}

SeriesData a_coeffs_with_a1(const ParameterK& param, const OrbitPairings& orbit, int max_order,
                            const CVec2& a1) {
  return forward(param, orbit, max_order, a1);
}

std::pair<cplx, cplx> g_values(const OrbitPairings& orbit, cplx z) {
  cplx sr = 0.0;
  cplx sf = 0.0;
  for (int i = 0; i < orbit.n(); ++i) {
    const cplx dr = 1.0 - z * orbit.rot[i];
    const cplx df = 1.0 - z * orbit.refl[i];
    if (std::abs(dr) < 1e-14 || std::abs(df) < 1e-14)
      throw DomainError("z hits a pole 1/<g x, y> of g and g_s");
    sr += orbit.rot[i] / dr;
    sf += orbit.refl[i] / df;
  }
  return {sr + sf, sr - sf};
}

double residual_check(const ParameterK& param, const OrbitPairings& orbit, const SeriesData& series,
                      cplx z) {
  if (z == cplx(0.0)) throw DomainError("residual_check needs z != 0");
  if (std::abs(z) * orbit.a_bound >= 1.0) throw DomainError("z lies outside the disk of convergence");
  const cplx gamma = param.gamma();
  const cplx c = gamma / (2.0 * param.n());
  const auto [g, gs] = g_values(orbit, z);
  const CVec2 q = series.q_at(z);
  const CVec2 dq = series.q_derivative_at(z);
  const cplx r0 = dq[0] - g - (c * g * q[0] - c * gs * q[1]);
  const cplx r1 = dq[1] - gs - (c * gs * q[0] - (2.0 * gamma / z + c * g) * q[1]);
  return std::sqrt(std::norm(r0) + std::norm(r1));
}

cplx em_genseries(const ParameterK& param, const OrbitPairings& orbit, cplx xy,
                  const SeriesData& series, int m) {
  if (m < 0) throw DomainError("degree must be nonnegative");
  if (m > series.order) {
    throw RangeError("E_" + std::to_string(m) + " needs series coefficients beyond the truncation order " +
                     std::to_string(series.order));
  }
  // (gamma/2n) phi_0 = 1 by construction, and a = 0 leaves only that term
  if (m == 0) return 1.0;
  if (orbit.a_bound == 0.0) return 0.0;
  const Pochhammer poch(param.gamma(), m);
  cplx acc = 0.0;  // Horner: sum_j phi_j xy^{m-j}
  for (int j = 0; j <= m; ++j) acc = acc * xy + series.phi[static_cast<std::size_t>(j)];
  return param.gamma() / (2.0 * param.n()) * acc / poch[m];
}

bool is_sigma_invariant(const OrbitPairings& orbit, double rel_tol) {
  const double tol = rel_tol * std::max(orbit.a_bound, 1.0);
  std::vector<bool> used(orbit.refl.size(), false);
  for (const cplx& r : orbit.rot) {
    bool found = false;
    for (std::size_t j = 0; j < orbit.refl.size(); ++j) {
      if (!used[j] && std::abs(orbit.refl[j] - r) <= tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

void require_sigma(const OrbitPairings& orbit) {
  if (!is_sigma_invariant(orbit))
    throw DomainError("closed forms need x or y to be invariant under sigma");
}

}  // namespace

cplx phi_sigma_invariant(const ParameterK& param, const OrbitPairings& orbit, cplx z) {
  param.require_series();
  require_sigma(orbit);
  cplx log_prod = 0.0;
  for (const cplx& c : orbit.rot) {
    const cplx w = z * c;
    if (std::abs(w) >= 1.0) throw DomainError("|z <r^i x, y>| must stay below 1");
    const cplx base = 1.0 - w;
    if (base.real() < 0.0 && std::abs(base.imag()) < 1e-14)
      throw DomainError("1 - z<r^i x,y> is on the branch cut of the principal logarithm");
    log_prod += std::log(base);
  }
  return 2.0 / param.k() * std::exp(-param.k() * log_prod);
}

std::vector<cplx> phi_sigma_coefficients(const ParameterK& param, const OrbitPairings& orbit, int order) {
  param.require_series();
  require_sigma(orbit);
  std::vector<cplx> acc(static_cast<std::size_t>(order) + 1, 0.0);
  acc[0] = 2.0 / param.k();
  std::vector<cplx> factor(static_cast<std::size_t>(order) + 1);
  for (const cplx& c : orbit.rot) {
    // (1 - z c)^{-k} = sum_nu (k)_nu / nu! c^nu z^nu
    factor[0] = 1.0;
    for (int nu = 0; nu < order; ++nu) factor[nu + 1] = factor[nu] * (param.k() + static_cast<double>(nu)) / (nu + 1.0) * c;
    for (int p = order; p >= 0; --p) {
      cplx s = 0.0;
      for (int q = 0; q <= p; ++q) s += acc[q] * factor[p - q];
      acc[p] = s;
    }
  }
  return acc;
}

std::vector<cplx> em_closed_sigma_sequence(const ParameterK& param, const OrbitPairings& orbit, int max_m) {
  if (max_m < 0) throw DomainError("degree must be nonnegative");
  param.require_regular();
  require_sigma(orbit);
  // inner sums: coefficients of prod_i (1 - z c_i)^{-k}
  std::vector<cplx> inner(static_cast<std::size_t>(max_m) + 1, 0.0);
  inner[0] = 1.0;
  std::vector<cplx> factor(static_cast<std::size_t>(max_m) + 1);
  for (const cplx& c : orbit.rot) {
    factor[0] = 1.0;
    for (int nu = 0; nu < max_m; ++nu) factor[nu + 1] = factor[nu] * (param.k() + static_cast<double>(nu)) / (nu + 1.0) * c;
    for (int p = max_m; p >= 0; --p) {
      cplx s = 0.0;
      for (int q = 0; q <= p; ++q) s += inner[q] * factor[p - q];
      inner[p] = s;
    }
  }
  const cplx xy = orbit.xy();
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(max_m) + 1);
  cplx horner = 0.0;
  cplx inv_poch = 1.0;
  for (int m = 0; m <= max_m; ++m) {
    if (m > 0) inv_poch /= (static_cast<double>(m) + param.gamma());
    horner = horner * xy + inner[m];
    out.push_back(horner * inv_poch);
  }
  return out;
}

cplx em_closed_sigma(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                     const PlanePoint& y, int m) {
  return em_closed_sigma_sequence(param, orbit_pairings(group, x, y), m).back();
}

int truncation_order(const ParameterK& param, double a_bound, double delta, double rho, double tol,
                     int target_m) {
  int order = std::max(2 * target_m, 40);
  if (a_bound == 0.0) return order;
  const double s = delta * a_bound * rho;
  if (!(s < 1.0)) throw DomainError("contour radius must lie inside the disk of radius 1/(delta a)");
  const double lead = 2.0 * param.n() / std::abs(param.gamma());
  constexpr int kMaxOrder = 1 << 14;
  while (lead * std::pow(s, order + 1) / (1.0 - s) >= tol) {
    order *= 2;
    if (order > kMaxOrder)
      throw ConvergenceError("series truncation order exceeds " + std::to_string(kMaxOrder));
  }
  return order;
}

}  // namespace dunkl
