#pragma once

#include <array>
#include <vector>

#include "dunkl/dihedral.hpp"
#include "dunkl/parameter.hpp"
#include "dunkl/poly2.hpp"

namespace dunkl {

/// Relative tolerance on the remainder of each divided difference in the
/// Dunkl operator. A larger remainder means f - f o sigma_alpha does not vanish
/// on the mirror, i.e. the reflection is wrong.
inline constexpr double kDividedDifferenceTol = 1e-10;

/// T_xi f = d_xi f + sum_alpha k <alpha, xi> (f - f o sigma_alpha) / <alpha, x>.
Poly2 dunkl_apply(const DihedralGroup& group, const ParameterK& param,
                  const std::array<double, 2>& xi, const Poly2& f);

/// A f = k * sum_j f o (r^j sigma).
Poly2 a_op(const DihedralGroup& group, const ParameterK& param, const Poly2& f);

/// Coefficients a_j(m), b_j(m) of the inverse of (m + gamma) - A on P_m.
struct HCoefficients {
  cplx a0;    // a_0(m)
  cplx aj;    // a_j(m), j != 0
  cplx b;     // b_j(m), all j
};
HCoefficients h_coefficients(const ParameterK& param, int m);

/// H_m f = sum_j a_j(m) f o r^j + sum_j b_j(m) f o (r^j sigma), f homogeneous of degree m >= 1.
Poly2 h_op(const DihedralGroup& group, const ParameterK& param, int m, const Poly2& f);

/// The intertwining operator V_k, built degree by degree from
///   V(p)(x) = sum_j x_j V(d_j H p)(x),  V(1) = 1,
/// on the monomial basis. Images of monomials are cached, so one instance can
/// serve many polynomials; the table only grows.
class Intertwiner {
 public:
  Intertwiner(const DihedralGroup& group, const ParameterK& param);

  Poly2 apply(const Poly2& f);
  /// V applied to a homogeneous run of degree t (coefficients of x1^{t-b} x2^b).
  std::vector<cplx> apply_homogeneous(int t, const std::vector<cplx>& run);
  int table_degree() const noexcept { return static_cast<int>(table_.size()) - 1; }

 private:
  void extend_to(int degree);

  DihedralGroup group_;
  ParameterK param_;
  // table_[d][b] = V(x1^{d-b} x2^b), as a homogeneous run of length d + 1
  std::vector<std::vector<std::vector<cplx>>> table_;
};

Poly2 intertwine(const DihedralGroup& group, const ParameterK& param, const Poly2& f);

/// <., y>^m / m! as a polynomial in x.
Poly2 scaled_power_of_pairing(const PlanePoint& y, int m);

/// E_m(., y) = V(<., y>^m) / m! as a polynomial in x.
Poly2 em_polynomial(Intertwiner& v, const PlanePoint& y, int m);

/// Ground-truth E_m(x, y) from the symbolic construction.
cplx oracle_em(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
               const PlanePoint& y, int m);

/// E_0..E_M(x, y) from one shared intertwiner table.
std::vector<cplx> oracle_em_sequence(const DihedralGroup& group, const ParameterK& param,
                                     const PlanePoint& x, const PlanePoint& y, int max_m);

}  // namespace dunkl
