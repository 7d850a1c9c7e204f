#include "dunkl/parameter.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "dunkl/errors.hpp"

namespace dunkl {

ParameterK::ParameterK(int n, cplx k) : n_(n), k_(k), gamma_(static_cast<double>(n) * k) {
  if (n < 2) throw DomainError("dihedral order must be >= 2 (got n = " + std::to_string(n) + ")");
  if (!std::isfinite(k.real()) || !std::isfinite(k.imag()))
    throw DomainError("parameter k must be finite");
}

double ParameterK::regularity_margin() const noexcept {
  const cplx two_gamma = 2.0 * gamma_;
  const double re = two_gamma.real();
  const double im = std::abs(two_gamma.imag());
  // nearest element of {-1, -2, ...}
  double nearest = std::round(re);
  if (nearest > -1.0) nearest = -1.0;
  return std::hypot(re - nearest, im);
}

void ParameterK::require_regular() const {
  if (!is_regular()) {
    throw DomainError("gamma = " + format_complex(gamma_) +
                      " violates the regularity condition: 2*gamma must not be a negative integer");
  }
}

void ParameterK::require_series() const {
  require_regular();
  if (std::abs(gamma_) <= kRegularityTol) {
    throw DomainError("gamma = 0 is excluded from the series paths (use the k = 0 exponential shortcut)");
  }
}

std::string ParameterK::describe() const {
  return "n = " + std::to_string(n_) + ", k = " + format_complex(k_) + ", gamma = " + format_complex(gamma_);
}

Pochhammer::Pochhammer(cplx gamma, int max_order) : gamma_(gamma) {
  if (max_order < 0) throw DomainError("Pochhammer order must be nonnegative");
  values_.reserve(static_cast<std::size_t>(max_order) + 1);
  values_.push_back(1.0);
  for (int m = 0; m < max_order; ++m) {
    const cplx next = values_.back() * (1.0 + gamma + static_cast<double>(m));
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) {
      throw RangeError("(1+gamma)_" + std::to_string(m + 1) +
                       " overflows double precision; reduce the maximal degree");
    }
    values_.push_back(next);
  }
}

double log_abs_pochhammer(cplx gamma, int m) {
  double s = 0.0;
  for (int j = 1; j <= m; ++j) s += std::log(std::abs(gamma + static_cast<double>(j)));
  return s;
}

std::string format_complex(cplx z) {
  char buf[96];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.6g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace dunkl
