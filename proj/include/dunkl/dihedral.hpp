#pragma once

#include <array>
#include <complex>
#include <vector>

namespace dunkl {

using cplx = std::complex<double>;

/// Point of the (complexified) plane. Arguments x of the kernel are real;
/// the second argument y may carry complex coordinates.
struct PlanePoint {
  cplx c0{};
  cplx c1{};

  PlanePoint() = default;
  PlanePoint(cplx a, cplx b) : c0(a), c1(b) {}
  PlanePoint(double a, double b) : c0(a), c1(b) {}

  bool is_real() const noexcept { return c0.imag() == 0.0 && c1.imag() == 0.0; }
  bool is_finite() const noexcept;
  /// Euclidean norm of the underlying C^2 vector.
  double norm() const noexcept;

  friend PlanePoint operator*(double s, const PlanePoint& p) { return {s * p.c0, s * p.c1}; }
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Real 2x2 matrix stored row-major: {m00, m01, m10, m11}.
using Mat2 = std::array<double, 4>;

/// Bilinear pairing x1*y1 + x2*y2. No complex conjugation.
cplx pairing(const PlanePoint& x, const PlanePoint& y) noexcept;

struct GroupElement {
  enum class Kind { rotation, reflection };
  Kind kind = Kind::rotation;
  int index = 0;  // r^index, or r^index * sigma

  static GroupElement rotation(int j) { return {Kind::rotation, j}; }
  static GroupElement reflection(int j) { return {Kind::reflection, j}; }
  bool is_reflection() const noexcept { return kind == Kind::reflection; }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// The dihedral group of order 2n acting on the plane. The rotation r turns
/// by 2*pi/n and sigma is complex conjugation z -> conj(z); the reflections
/// are exactly the elements r^j sigma.
class DihedralGroup {
 public:
  explicit DihedralGroup(int n);

  int n() const noexcept { return n_; }
  int order() const noexcept { return 2 * n_; }
  double rotation_angle() const noexcept;

  /// Positive roots i*e^{i*j*pi/n} as real plane vectors, j = 0..n-1.
  const std::vector<std::array<double, 2>>& positive_roots() const noexcept { return roots_; }

  /// Reflection in the hyperplane orthogonal to positive root j; equals r^j sigma.
  GroupElement root_reflection(int j) const { return GroupElement::reflection(j); }

  /// All 2n elements: rotations r^0..r^{n-1} followed by reflections r^j sigma.
  std::vector<GroupElement> elements() const;

  /// Matrix of g in the standard basis, recomputed from (kind, index, n).
  Mat2 matrix(const GroupElement& g) const;
  PlanePoint act(const GroupElement& g, const PlanePoint& x) const;

  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

 private:
  int n_;
  std::vector<std::array<double, 2>> roots_;
};

DihedralGroup make_group(int n);

/// Orbit data of a pair (x, y): all 2n pairings <g x, y> and their maximal modulus.
struct OrbitPairings {
  std::vector<cplx> rot;   // <r^j x, y>
  std::vector<cplx> refl;  // <r^j sigma x, y>
  double a_bound = 0.0;    // max |<g x, y>| over the group

  int n() const noexcept { return static_cast<int>(rot.size()); }
  cplx xy() const noexcept { return rot.front(); }
  /// The 2n diagonal entries: rotation pairings followed by reflection pairings.
  std::vector<cplx> big_diag() const;
  /// Same pairings, but for the pair (sigma x, y).
  OrbitPairings reflected() const;
};

OrbitPairings orbit_pairings(const DihedralGroup& group, const PlanePoint& x, const PlanePoint& y);

}  // namespace dunkl
