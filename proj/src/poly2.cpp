#include "dunkl/poly2.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

using Homog = std::vector<cplx>;

// Product of homogeneous parts given by their coefficient runs.
Homog homog_mul(const Homog& f, const Homog& g) {
  Homog out(f.size() + g.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == cplx(0.0)) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

}  // namespace

Poly2::Poly2(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("polynomial degree bound must be nonnegative");
  c_.assign(offset(degree + 1), cplx(0.0));
}

Poly2 Poly2::constant(cplx c) {
  Poly2 p(0);
  p.c_[0] = c;
  return p;
}

Poly2 Poly2::monomial(int a, int b, cplx c) {
  Poly2 p(a + b);
  p.set(a, b, c);
  return p;
}

Poly2 Poly2::linear(cplx c0, cplx c1) {
  Poly2 p(1);
  p.set(1, 0, c0);
  p.set(0, 1, c1);
  return p;
}

Poly2 Poly2::from_homogeneous(int t, const std::vector<cplx>& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(t) + 1)
    throw DomainError("homogeneous coefficient run has the wrong length");
  Poly2 p(t);
  std::copy(coeffs.begin(), coeffs.end(), p.c_.begin() + static_cast<std::ptrdiff_t>(offset(t)));
  return p;
}

int Poly2::effective_degree(double tol) const noexcept {
  for (int t = degree_; t >= 0; --t) {
    for (int b = 0; b <= t; ++b)
      if (std::abs(c_[offset(t) + static_cast<std::size_t>(b)]) > tol) return t;
  }
  return -1;
}

cplx Poly2::coeff(int a, int b) const noexcept {
  if (a < 0 || b < 0 || a + b > degree_) return 0.0;
  return c_[offset(a + b) + static_cast<std::size_t>(b)];
}

void Poly2::set(int a, int b, cplx value) {
  if (a < 0 || b < 0 || a + b > degree_) throw DomainError("monomial outside the degree bound");
  c_[offset(a + b) + static_cast<std::size_t>(b)] = value;
}

void Poly2::add_to(int a, int b, cplx value) {
  if (a < 0 || b < 0 || a + b > degree_) throw DomainError("monomial outside the degree bound");
  c_[offset(a + b) + static_cast<std::size_t>(b)] += value;
}

std::vector<cplx> Poly2::homogeneous_coeffs(int t) const {
  if (t < 0 || t > degree_) return std::vector<cplx>(static_cast<std::size_t>(std::max(t, 0)) + 1, 0.0);
  const auto first = c_.begin() + static_cast<std::ptrdiff_t>(offset(t));
  return {first, first + t + 1};
}

Poly2 Poly2::homogeneous_part(int t) const { return from_homogeneous(t, homogeneous_coeffs(t)); }

cplx Poly2::evaluate(const PlanePoint& x) const {
  // Horner in x2 inside each homogeneous run would not help much at these
  // sizes; plain power tables keep the rounding pattern easy to reason about.
  std::vector<cplx> p0(static_cast<std::size_t>(degree_) + 1, 1.0);
  std::vector<cplx> p1(static_cast<std::size_t>(degree_) + 1, 1.0);
  for (int i = 1; i <= degree_; ++i) {
    p0[i] = p0[i - 1] * x.c0;
    p1[i] = p1[i - 1] * x.c1;
  }
  cplx s = 0.0;
  for (int t = 0; t <= degree_; ++t)
    for (int b = 0; b <= t; ++b) s += c_[offset(t) + b] * p0[t - b] * p1[b];
  return s;
}

Poly2 Poly2::derivative(int var) const {
  Poly2 out(std::max(degree_ - 1, 0));
  for (int t = 1; t <= degree_; ++t) {
    for (int b = 0; b <= t; ++b) {
      const int a = t - b;
      const cplx c = c_[offset(t) + b];
      if (var == 0 && a > 0) out.add_to(a - 1, b, c * static_cast<double>(a));
      if (var == 1 && b > 0) out.add_to(a, b - 1, c * static_cast<double>(b));
    }
  }
  return out;
}

Poly2 Poly2::directional_derivative(const std::array<double, 2>& xi) const {
  Poly2 out = derivative(0) * cplx(xi[0]);
  out += derivative(1) * cplx(xi[1]);
  return out;
}

Poly2 Poly2::times_variable(int var) const {
  Poly2 out(degree_ + 1);
  for (int t = 0; t <= degree_; ++t)
    for (int b = 0; b <= t; ++b) {
      const cplx c = c_[offset(t) + b];
      if (var == 0)
        out.set(t - b + 1, b, c);
      else
        out.set(t - b, b + 1, c);
    }
  return out;
}

Poly2 Poly2::compose(const Mat2& m) const {
  // powers of the image linear forms (m00 x1 + m01 x2)^a and (m10 x1 + m11 x2)^b
  std::vector<Homog> pow0{Homog{1.0}};
  std::vector<Homog> pow1{Homog{1.0}};
  const Homog l0{m[0], m[1]};
  const Homog l1{m[2], m[3]};
  for (int i = 1; i <= degree_; ++i) {
    pow0.push_back(homog_mul(pow0.back(), l0));
    pow1.push_back(homog_mul(pow1.back(), l1));
  }
  Poly2 out(degree_);
  for (int t = 0; t <= degree_; ++t) {
    for (int b = 0; b <= t; ++b) {
      const cplx c = c_[offset(t) + b];
      if (c == cplx(0.0)) continue;
      const Homog term = homog_mul(pow0[t - b], pow1[b]);
      for (int j = 0; j <= t; ++j) out.c_[offset(t) + j] += c * term[j];
    }
  }
  return out;
}

double Poly2::norm() const noexcept {
  double s = 0.0;
  for (const cplx& c : c_) s = std::max(s, std::abs(c));
  return s;
}

Poly2 Poly2::with_degree(int degree) const {
  Poly2 out(degree);
  const std::size_t n = std::min(c_.size(), out.c_.size());
  std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n), out.c_.begin());
  return out;
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  if (rhs.degree_ > degree_) *this = with_degree(rhs.degree_);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  if (rhs.degree_ > degree_) *this = with_degree(rhs.degree_);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Poly2& Poly2::operator*=(cplx s) {
  for (cplx& c : c_) c *= s;
  return *this;
}

Poly2 operator*(const Poly2& lhs, const Poly2& rhs) {
  Poly2 out(lhs.degree_ + rhs.degree_);
  for (int t = 0; t <= lhs.degree_; ++t)
    for (int b = 0; b <= t; ++b) {
      const cplx c = lhs.c_[Poly2::offset(t) + b];
      if (c == cplx(0.0)) continue;
      for (int u = 0; u <= rhs.degree_; ++u)
        for (int e = 0; e <= u; ++e)
          out.c_[Poly2::offset(t + u) + b + e] += c * rhs.c_[Poly2::offset(u) + e];
    }
  return out;
}

double max_coeff_diff(const Poly2& f, const Poly2& g) { return (f - g).norm(); }

LinearDivision divide_by_linear(const Poly2& f, double l0, double l1) {
  if (l0 == 0.0 && l1 == 0.0) throw DomainError("division by the zero linear form");
  const int d = f.degree();
  LinearDivision out{Poly2(std::max(d - 1, 0)), 0.0};
  for (int t = 1; t <= d; ++t) {
    const std::vector<cplx> h = f.homogeneous_coeffs(t);
    std::vector<cplx> q(static_cast<std::size_t>(t), 0.0);
    cplx rem;
    // h_b = l0 q_b + l1 q_{b-1}, with q_{-1} = q_t = 0
    if (std::abs(l1) >= std::abs(l0)) {
      cplx next = 0.0;  // q_b for the b handled previously
      for (int b = t; b >= 1; --b) {
        next = (h[b] - l0 * next) / l1;
        q[b - 1] = next;
      }
      rem = h[0] - l0 * q[0];
    } else {
      cplx prev = 0.0;
      for (int b = 0; b < t; ++b) {
        prev = (h[b] - l1 * prev) / l0;
        q[b] = prev;
      }
      rem = h[t] - l1 * q[t - 1];
    }
    for (int b = 0; b < t; ++b) out.quotient.set(t - 1 - b, b, q[b]);
    out.remainder_norm = std::max(out.remainder_norm, std::abs(rem));
  }
  out.remainder_norm = std::max(out.remainder_norm, std::abs(f.coeff(0, 0)));
  return out;
}

}  // namespace dunkl
