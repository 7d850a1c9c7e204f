#include "dunkl/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

int mod(int j, int n) { return ((j % n) + n) % n; }

}  // namespace

bool PlanePoint::is_finite() const noexcept {
  return std::isfinite(c0.real()) && std::isfinite(c0.imag()) && std::isfinite(c1.real()) &&
         std::isfinite(c1.imag());
}

double PlanePoint::norm() const noexcept {
  return std::sqrt(std::norm(c0) + std::norm(c1));
}

cplx pairing(const PlanePoint& x, const PlanePoint& y) noexcept {
  return x.c0 * y.c0 + x.c1 * y.c1;
}

DihedralGroup::DihedralGroup(int n) : n_(n) {
  if (n < 2) throw DomainError("dihedral order must be >= 2 (got n = " + std::to_string(n) + ")");
  roots_.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = std::numbers::pi * j / n;
    roots_.push_back({-std::sin(t), std::cos(t)});
  }
}

double DihedralGroup::rotation_angle() const noexcept { return 2.0 * std::numbers::pi / n_; }

std::vector<GroupElement> DihedralGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(2 * n_));
  for (int j = 0; j < n_; ++j) out.push_back(GroupElement::rotation(j));
  for (int j = 0; j < n_; ++j) out.push_back(GroupElement::reflection(j));
  return out;
}

Mat2 DihedralGroup::matrix(const GroupElement& g) const {
  const double t = 2.0 * std::numbers::pi * mod(g.index, n_) / n_;
  const double c = std::cos(t);
  const double s = std::sin(t);
  if (g.is_reflection()) return {c, s, s, -c};  // z -> conj(z) e^{it}
  return {c, -s, s, c};
}

PlanePoint DihedralGroup::act(const GroupElement& g, const PlanePoint& x) const {
  const Mat2 m = matrix(g);
  return {m[0] * x.c0 + m[1] * x.c1, m[2] * x.c0 + m[3] * x.c1};
}

GroupElement DihedralGroup::compose(const GroupElement& g, const GroupElement& h) const {
  if (!g.is_reflection() && !h.is_reflection())
    return GroupElement::rotation(mod(g.index + h.index, n_));
  if (!g.is_reflection()) return GroupElement::reflection(mod(g.index + h.index, n_));
  // sigma r^b = r^{-b} sigma
  if (!h.is_reflection()) return GroupElement::reflection(mod(g.index - h.index, n_));
  return GroupElement::rotation(mod(g.index - h.index, n_));
}

GroupElement DihedralGroup::inverse(const GroupElement& g) const {
  if (g.is_reflection()) return g;
  return GroupElement::rotation(mod(-g.index, n_));
}

DihedralGroup make_group(int n) { return DihedralGroup(n); }

std::vector<cplx> OrbitPairings::big_diag() const {
  std::vector<cplx> d(rot);
  d.insert(d.end(), refl.begin(), refl.end());
  return d;
}

OrbitPairings OrbitPairings::reflected() const {
  return OrbitPairings{refl, rot, a_bound};
}

OrbitPairings orbit_pairings(const DihedralGroup& group, const PlanePoint& x, const PlanePoint& y) {
  const int n = group.n();
  OrbitPairings out;
  out.rot.reserve(static_cast<std::size_t>(n));
  out.refl.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    out.rot.push_back(pairing(group.act(GroupElement::rotation(j), x), y));
    out.refl.push_back(pairing(group.act(GroupElement::reflection(j), x), y));
  }
  double a = 0.0;
  for (const cplx& c : out.rot) a = std::max(a, std::abs(c));
  for (const cplx& c : out.refl) a = std::max(a, std::abs(c));
  out.a_bound = a;
  return out;
}

}  // namespace dunkl
