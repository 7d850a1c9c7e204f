#include "dunkl/polyalg.hpp"

#include <cmath>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

Poly2 dunkl_apply(const DihedralGroup& group, const ParameterK& param,
                  const std::array<double, 2>& xi, const Poly2& f) {
  Poly2 out = f.directional_derivative(xi).with_degree(std::max(f.degree() - 1, 0));
  const double scale = f.norm();
  const auto& roots = group.positive_roots();
  for (int j = 0; j < group.n(); ++j) {
    const auto& alpha = roots[static_cast<std::size_t>(j)];
    const double weight = alpha[0] * xi[0] + alpha[1] * xi[1];
    if (weight == 0.0) continue;
    const Poly2 numerator = f - f.compose(group.matrix(group.root_reflection(j)));
    const LinearDivision div = divide_by_linear(numerator, alpha[0], alpha[1]);
    if (div.remainder_norm > kDividedDifferenceTol * std::max(scale, numerator.norm())) {
      throw ConsistencyError("divided difference for root " + std::to_string(j) +
                             " left a remainder of " + std::to_string(div.remainder_norm));
    }
    out += div.quotient * (param.k() * weight);
  }
  return out;
}

Poly2 a_op(const DihedralGroup& group, const ParameterK& param, const Poly2& f) {
  Poly2 out(f.degree());
  for (int j = 0; j < group.n(); ++j) out += f.compose(group.matrix(GroupElement::reflection(j)));
  return out * param.k();
}

HCoefficients h_coefficients(const ParameterK& param, int m) {
  if (m < 1) throw DomainError("H_m is only defined on P_m for m >= 1 (got m = " + std::to_string(m) + ")");
  param.require_regular();
  const cplx g = param.gamma();
  const double n = param.n();
  const double md = m;
  const cplx common = g * g / (n * md * (md + g) * (md + 2.0 * g));
  return {1.0 / (md + g) + common, common, g / (n * md * (md + 2.0 * g))};
}

Poly2 h_op(const DihedralGroup& group, const ParameterK& param, int m, const Poly2& f) {
  const HCoefficients h = h_coefficients(param, m);
  const double scale = f.norm();
  for (int t = 0; t <= f.degree(); ++t) {
    if (t == m) continue;
    for (const cplx& c : f.homogeneous_coeffs(t))
      if (std::abs(c) > 1e-14 * scale)
        throw DomainError("h_op expects a homogeneous polynomial of degree " + std::to_string(m));
  }
  Poly2 out = f * h.a0;
  for (int j = 1; j < group.n(); ++j) out += f.compose(group.matrix(GroupElement::rotation(j))) * h.aj;
  for (int j = 0; j < group.n(); ++j)
    out += f.compose(group.matrix(GroupElement::reflection(j))) * h.b;
  return out;
}

Intertwiner::Intertwiner(const DihedralGroup& group, const ParameterK& param)
    : group_(group), param_(param) {
  param_.require_regular();
  table_.push_back({{cplx(1.0)}});
}

void Intertwiner::extend_to(int degree) {
  while (table_degree() < degree) {
    const int d = table_degree() + 1;
    std::vector<std::vector<cplx>> level;
    level.reserve(static_cast<std::size_t>(d) + 1);
    const auto& lower = table_.back();
    for (int b = 0; b <= d; ++b) {
      const Poly2 h = h_op(group_, param_, d, Poly2::monomial(d - b, b));
      const std::vector<cplx> run = h.homogeneous_coeffs(d);
      // V(d_1 h) and V(d_2 h), both homogeneous of degree d - 1
      std::vector<cplx> v1(static_cast<std::size_t>(d), 0.0);
      std::vector<cplx> v2(static_cast<std::size_t>(d), 0.0);
      for (int e = 0; e <= d; ++e) {
        const cplx c = run[e];
        if (c == cplx(0.0)) continue;
        if (e < d) {  // d/dx1 of x1^{d-e} x2^e
          const cplx w = c * static_cast<double>(d - e);
          for (int i = 0; i < d; ++i) v1[i] += w * lower[e][i];
        }
        if (e > 0) {  // d/dx2
          const cplx w = c * static_cast<double>(e);
          for (int i = 0; i < d; ++i) v2[i] += w * lower[e - 1][i];
        }
      }
      std::vector<cplx> image(static_cast<std::size_t>(d) + 1, 0.0);
      for (int i = 0; i < d; ++i) {
        image[i] += v1[i];      // x1 * x1^{d-1-i} x2^i
        image[i + 1] += v2[i];  // x2 * x1^{d-1-i} x2^i
      }
      level.push_back(std::move(image));
    }
    table_.push_back(std::move(level));
  }
}

std::vector<cplx> Intertwiner::apply_homogeneous(int t, const std::vector<cplx>& run) {
  extend_to(t);
  std::vector<cplx> out(static_cast<std::size_t>(t) + 1, 0.0);
  const auto& level = table_[static_cast<std::size_t>(t)];
  for (int b = 0; b <= t; ++b) {
    if (run[b] == cplx(0.0)) continue;
    for (int i = 0; i <= t; ++i) out[i] += run[b] * level[b][i];
  }
  return out;
}

Poly2 Intertwiner::apply(const Poly2& f) {
  Poly2 out(f.degree());
  for (int t = 0; t <= f.degree(); ++t) out += Poly2::from_homogeneous(t, apply_homogeneous(t, f.homogeneous_coeffs(t)));
  return out;
}

Poly2 intertwine(const DihedralGroup& group, const ParameterK& param, const Poly2& f) {
  Intertwiner v(group, param);
  return v.apply(f);
}

Poly2 scaled_power_of_pairing(const PlanePoint& y, int m) {
  if (m < 0) throw DomainError("degree must be nonnegative");
  Poly2 p = Poly2::constant(1.0);
  const Poly2 lin = Poly2::linear(y.c0, y.c1);
  for (int j = 1; j <= m; ++j) p = (p * lin) * cplx(1.0 / j);
  return p;
}

Poly2 em_polynomial(Intertwiner& v, const PlanePoint& y, int m) {
  const Poly2 p = scaled_power_of_pairing(y, m);
  return Poly2::from_homogeneous(m, v.apply_homogeneous(m, p.homogeneous_coeffs(m)));
}

cplx oracle_em(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
               const PlanePoint& y, int m) {
  if (m < 0) throw DomainError("degree must be nonnegative");
  Intertwiner v(group, param);
  return em_polynomial(v, y, m).evaluate(x);
}

std::vector<cplx> oracle_em_sequence(const DihedralGroup& group, const ParameterK& param,
                                     const PlanePoint& x, const PlanePoint& y, int max_m) {
  Intertwiner v(group, param);
  std::vector<cplx> out;
  for (int m = 0; m <= max_m; ++m) out.push_back(em_polynomial(v, y, m).evaluate(x));
  return out;
}

}  // namespace dunkl
