#pragma once

#include <complex>
#include <string>
#include <vector>

namespace dunkl {

using cplx = std::complex<double>;

/// Constant multiplicity k on the roots of D_n, together with gamma = n*k.
///
/// The intertwining operator and the homogeneous components exist when 2*gamma
/// avoids the negative integers. Series based paths additionally need gamma != 0
/// since they divide by gamma; the k = 0 case is served by explicit shortcuts.
class ParameterK {
 public:
  static constexpr double kRegularityTol = 1e-12;

  ParameterK(int n, cplx k);

  int n() const noexcept { return n_; }
  cplx k() const noexcept { return k_; }
  cplx gamma() const noexcept { return gamma_; }

  /// Distance of 2*gamma to the set {-1, -2, -3, ...}.
  double regularity_margin() const noexcept;
  bool is_regular() const noexcept { return regularity_margin() > kRegularityTol; }
  bool is_zero() const noexcept { return k_ == cplx(0.0, 0.0); }

  /// Throws DomainError unless 2*gamma is not a negative integer.
  void require_regular() const;
  /// require_regular() plus gamma != 0.
  void require_series() const;

  std::string describe() const;

 private:
  int n_;
  cplx k_;
  cplx gamma_;
};

/// Rising factorials p_m = (1 + gamma)_m for m = 0..max_order, built by
/// p_{m+1} = p_m * (1 + gamma + m). Throws RangeError on overflow.
class Pochhammer {
 public:
  Pochhammer(cplx gamma, int max_order);

  cplx gamma() const noexcept { return gamma_; }
  int max_order() const noexcept { return static_cast<int>(values_.size()) - 1; }
  cplx operator[](int m) const { return values_.at(static_cast<std::size_t>(m)); }
  const std::vector<cplx>& values() const noexcept { return values_; }

 private:
  cplx gamma_;
  std::vector<cplx> values_;
};

/// log |(1 + gamma)_m|, usable far beyond the overflow point of Pochhammer.
double log_abs_pochhammer(cplx gamma, int m);

std::string format_complex(cplx z);

}  // namespace dunkl
