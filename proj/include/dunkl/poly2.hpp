#pragma once

#include <array>
#include <complex>
#include <vector>

#include "dunkl/dihedral.hpp"

namespace dunkl {

/// Dense bivariate polynomial with complex coefficients, sum of c[a][b] x1^a x2^b
/// over a + b <= degree(). Coefficients are stored graded by total degree, so
/// every homogeneous part is a contiguous run ordered by the power of x2.
class Poly2 {
 public:
  Poly2() : Poly2(0) {}
  explicit Poly2(int degree);

  static Poly2 constant(cplx c);
  static Poly2 monomial(int a, int b, cplx c = 1.0);
  /// c0 * x1 + c1 * x2
  static Poly2 linear(cplx c0, cplx c1);
  /// Homogeneous polynomial of degree t from its coefficients on x1^{t-b} x2^b.
  static Poly2 from_homogeneous(int t, const std::vector<cplx>& coeffs);

  /// Upper bound on the total degree (storage size), not necessarily attained.
  int degree() const noexcept { return degree_; }
  /// Largest t with a nonzero homogeneous part of degree t, or -1 for the zero polynomial.
  int effective_degree(double tol = 0.0) const noexcept;

  cplx coeff(int a, int b) const noexcept;
  void set(int a, int b, cplx value);
  void add_to(int a, int b, cplx value);

  /// Coefficients of x1^{t-b} x2^b, b = 0..t.
  std::vector<cplx> homogeneous_coeffs(int t) const;
  Poly2 homogeneous_part(int t) const;

  cplx evaluate(const PlanePoint& x) const;
  Poly2 derivative(int var) const;
  Poly2 directional_derivative(const std::array<double, 2>& xi) const;
  Poly2 times_variable(int var) const;
  /// The polynomial x -> f(M x).
  Poly2 compose(const Mat2& m) const;

  /// Largest coefficient modulus.
  double norm() const noexcept;
  Poly2 with_degree(int degree) const;

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(cplx s);

  friend Poly2 operator+(Poly2 lhs, const Poly2& rhs) { return lhs += rhs; }
  friend Poly2 operator-(Poly2 lhs, const Poly2& rhs) { return lhs -= rhs; }
  friend Poly2 operator*(Poly2 p, cplx s) { return p *= s; }
  friend Poly2 operator*(cplx s, Poly2 p) { return p *= s; }
  friend Poly2 operator*(const Poly2& lhs, const Poly2& rhs);

  static std::size_t offset(int t) noexcept { return static_cast<std::size_t>(t) * (t + 1) / 2; }

 private:
  int degree_;
  std::vector<cplx> c_;
};

/// Largest coefficient modulus of f - g.
double max_coeff_diff(const Poly2& f, const Poly2& g);

/// Result of dividing by a real linear form l(x) = l0 x1 + l1 x2.
struct LinearDivision {
  Poly2 quotient;
  double remainder_norm = 0.0;
};

/// Exact division f = q * l + r where r is what is left on the line l = 0.
/// The pivot variable is the one with the larger coefficient in l, so the
/// back substitution only multiplies by ratios of modulus at most one.
LinearDivision divide_by_linear(const Poly2& f, double l0, double l1);

}  // namespace dunkl
