#include "dunkl/kernel.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <mpfr.h>

#include "dunkl/errors.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/recurrence.hpp"

namespace dunkl {

namespace {

constexpr double kHalfE2 = 0.5 * std::numbers::e * std::numbers::e;
constexpr int kGaussOrder = 20;
// Geometric panels [2^{-l}, 2^{1-l}] reach down to 2^{-kGradingLevels}; the
// transformed integrand is bounded, so what is left below is O(2^{-60}).
constexpr int kGradingLevels = 60;
constexpr int kMaxSubdivision = 64;

struct GaussRule {
  std::array<double, kGaussOrder> x;  // on [-1, 1]
  std::array<double, kGaussOrder> w;
};

const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    using G = boost::math::quadrature::gauss<double, kGaussOrder>;
    GaussRule r{};
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.x[k] = a[i];
      r.w[k++] = w[i];
      r.x[k] = -a[i];
      r.w[k++] = w[i];
    }
    return r;
  }();
  return rule;
}

double sup_series_ratio(cplx gamma) {
  // sup_{p>=1} max(1, p/|p + 2 gamma|)
  if (gamma.real() >= 0.0) return 1.0;
  const double g2 = 2.0 * std::abs(gamma);
  const int p_scan = static_cast<int>(std::ceil(g2 * 101.0)) + 1;
  double sup = 1.0;
  for (int p = 1; p <= p_scan; ++p) sup = std::max(sup, p / std::abs(static_cast<double>(p) + 2.0 * gamma));
  const double p_tail = p_scan + 1.0;
  return std::max(sup, p_tail / (p_tail - g2));
}

double sup_matrix_step(const ParameterK& param) {
  const double ag = std::abs(param.gamma());
  const int m_scan = static_cast<int>(std::ceil(100.0 * (1.0 + ag)));
  double sup = 0.0;
  for (int m = 0; m <= m_scan; ++m) sup = std::max(sup, coeff_matrix_norms(param, m).step_bound);
  // for m + 1 >= 4|gamma| the step bound is at most 1 + 2|g|^2/(m+1)^2 + 2.5|g|/(m+1), decreasing in m
  const double m1 = m_scan + 2.0;
  return std::max(sup, 1.0 + 2.0 * ag * ag / (m1 * m1) + 2.5 * ag / m1);
}

// Smallest M whose certified tail is below tol.
int certified_terms(cplx gamma, double s, double tol, double* tail) {
  for (int m = 0; m <= kMaxKernelTerms; ++m) {
    const double t = component_tail_bound(gamma, s, m);
    if (t < tol) {
      *tail = t;
      return m;
    }
  }
  throw ConvergenceError("kernel series needs more than " + std::to_string(kMaxKernelTerms) +
                         " terms for delta*a = " + std::to_string(s));
}

}  // namespace

DeltaConstant delta_effective(const ParameterK& param) {
  param.require_regular();
  DeltaConstant d;
  d.delta_series = 2.0 * std::abs(param.gamma()) * sup_series_ratio(param.gamma());
  d.delta_matrix = sup_matrix_step(param);
  d.delta_effective = std::max({1.0, d.delta_series, d.delta_matrix});
  return d;
}

const char* to_string(KernelMethod method) noexcept {
  switch (method) {
    case KernelMethod::series_sum:
      return "series-sum";
    case KernelMethod::integral:
      return "integral";
    case KernelMethod::sigma_closed:
      return "sigma-closed";
    case KernelMethod::exp_shortcut:
      return "exp-shortcut";
  }
  return "unknown";
}

double component_tail_bound(cplx gamma, double s, int max_m) {
  if (s == 0.0) return 0.0;
  const double log_s = std::log(s);
  const double log_lead = std::log(kHalfE2);
  double log_poch = log_abs_pochhammer(gamma, max_m);
  double sum = 0.0;
  for (int j = max_m + 1;; ++j) {
    log_poch += std::log(std::abs(gamma + static_cast<double>(j)));
    const double term = std::exp(log_lead + 2.0 * std::log(j + 2.0) + j * log_s - log_poch);
    sum += term;
    const double q = (j + 3.0) / (j + 2.0);
    const double ratio = q * q * s / std::abs(gamma + (j + 1.0));
    // beyond j + 1 >= -Re(gamma) the ratios only decrease
    if (ratio < 0.5 && j + 1.0 + gamma.real() >= 0.0) return sum + term * ratio / (1.0 - ratio);
    if (j > 100000) return std::numeric_limits<double>::infinity();
  }
}

KernelResult ek_series(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                       const PlanePoint& y, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (param.is_zero()) return {std::exp(pairing(x, y)), KernelMethod::exp_shortcut, 1, 0, 0.0};
  const OrbitPairings orbit = orbit_pairings(group, x, y);
  if (orbit.a_bound == 0.0) return {1.0, KernelMethod::series_sum, 1, 0, 0.0};
  param.require_series();

  const double s = delta_effective(param).delta_effective * orbit.a_bound;
  KernelResult r{0.0, KernelMethod::series_sum, 0, 0, 0.0};
  const int max_m = certified_terms(param.gamma(), s, tol, &r.tail_estimate);

  ComponentStream stream(param, orbit);
  cplx sum = stream.current();
  for (int m = 1; m <= max_m; ++m) sum += stream.next();
  r.value = sum;
  r.terms_used = max_m + 1;
  return r;
}

KernelResult ek_sigma_closed(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                             const PlanePoint& y, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const OrbitPairings orbit = orbit_pairings(group, x, y);
  if (!is_sigma_invariant(orbit)) throw DomainError("closed forms need x or y to be invariant under sigma");
  if (orbit.a_bound == 0.0) return {1.0, KernelMethod::sigma_closed, 1, 0, 0.0};
  param.require_regular();

  const double s = delta_effective(param).delta_effective * orbit.a_bound;
  KernelResult r{0.0, KernelMethod::sigma_closed, 0, 0, 0.0};
  const int max_m = certified_terms(param.gamma(), s, tol, &r.tail_estimate);
  cplx sum = 0.0;
  for (const cplx& e : em_closed_sigma_sequence(param, orbit, max_m)) sum += e;
  r.value = sum;
  r.terms_used = max_m + 1;
  return r;
}

namespace {

// Owning MPFR scalar with a fixed precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;
  MpReal(MpReal&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }
  ~MpReal() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct MpComplex {
  MpReal re;
  MpReal im;
  explicit MpComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
};

// (ar + i ai)(br + i bi) into (cr, ci); t1, t2 are scratch
void mp_mul(MpComplex& c, const MpComplex& a, const MpComplex& b, MpReal& t1, MpReal& t2) {
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_fma(c.im.get(), a.im.get(), b.re.get(), t2.get(), MPFR_RNDN);
  mpfr_set(c.re.get(), t1.get(), MPFR_RNDN);
}

constexpr double kLog2E = 1.4426950408889634;

}  // namespace

struct ContourKernel::Impl {
  cplx prefactor;
  int bits = 53;
  std::vector<cplx> z_inv;
  std::vector<cplx> samples;
  std::vector<double> log_scale;  // Re(1/z_j)
  // multiprecision copies: cos/rho, sin/rho and the samples
  std::vector<MpReal> mp_cos, mp_sin;
  std::vector<MpComplex> mp_samples;
};

ContourKernel::ContourKernel(const ParameterK& param, const OrbitPairings& orbit, const SeriesData& series,
                             double rho, int nodes, double target) {
  if (nodes < 8) throw DomainError("contour quadrature needs at least 8 nodes");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("contour radius must be positive and finite");
  if (!(target > 0.0 && target < 1.0)) throw DomainError("contour target accuracy must lie in (0, 1)");
  if (1.0 / rho > 2000.0) throw RangeError("contour radius too small: e^{1/rho} is beyond any working precision");
  auto impl = std::make_shared<Impl>();
  const cplx g = param.gamma();
  impl->prefactor = g * g / (2.0 * param.n() * static_cast<double>(nodes));
  const cplx xy = orbit.xy();
  impl->z_inv.reserve(static_cast<std::size_t>(nodes));
  impl->samples.reserve(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) {
    const cplx z = std::polar(rho, 2.0 * std::numbers::pi * j / nodes);
    const cplx denom = 1.0 - z * xy;
    if (std::abs(denom) < 1e-12) throw DomainError("contour passes through the pole 1/<x,y>");
    impl->z_inv.push_back(1.0 / z);
    impl->log_scale.push_back(impl->z_inv.back().real());
    impl->samples.push_back(series.phi_at(z) / denom);
  }

  const double lost = kLog2E / rho + std::log2(static_cast<double>(nodes));
  const double wanted = -std::log2(target);
  if (lost + wanted > 48.0) {
    const int bits = static_cast<int>(std::ceil((lost + wanted + 32.0) / 32.0)) * 32;
    impl->bits = bits;
    MpReal angle(bits), c(bits), sn(bits), t1(bits), t2(bits);
    MpComplex z(bits), acc(bits), tmp(bits), den(bits);
    for (int j = 0; j < nodes; ++j) {
      mpfr_const_pi(angle.get(), MPFR_RNDN);
      mpfr_mul_si(angle.get(), angle.get(), 2 * j, MPFR_RNDN);
      mpfr_div_si(angle.get(), angle.get(), nodes, MPFR_RNDN);
      mpfr_sin_cos(sn.get(), c.get(), angle.get(), MPFR_RNDN);
      mpfr_mul_d(z.re.get(), c.get(), rho, MPFR_RNDN);
      mpfr_mul_d(z.im.get(), sn.get(), rho, MPFR_RNDN);
      // Horner for the truncated Phi
      mpfr_set_zero(acc.re.get(), 1);
      mpfr_set_zero(acc.im.get(), 1);
      for (std::size_t p = series.phi.size(); p-- > 0;) {
        mp_mul(acc, acc, z, t1, t2);
        mpfr_add_d(acc.re.get(), acc.re.get(), series.phi[p].real(), MPFR_RNDN);
        mpfr_add_d(acc.im.get(), acc.im.get(), series.phi[p].imag(), MPFR_RNDN);
      }
      // divide by 1 - z<x,y>
      MpComplex xyz(bits);
      mpfr_set_d(tmp.re.get(), xy.real(), MPFR_RNDN);
      mpfr_set_d(tmp.im.get(), xy.imag(), MPFR_RNDN);
      mp_mul(xyz, z, tmp, t1, t2);
      mpfr_d_sub(den.re.get(), 1.0, xyz.re.get(), MPFR_RNDN);
      mpfr_neg(den.im.get(), xyz.im.get(), MPFR_RNDN);
      // acc * conj(den) / |den|^2
      mpfr_neg(den.im.get(), den.im.get(), MPFR_RNDN);
      mp_mul(tmp, acc, den, t1, t2);
      mpfr_sqr(t1.get(), den.re.get(), MPFR_RNDN);
      mpfr_fma(t1.get(), den.im.get(), den.im.get(), t1.get(), MPFR_RNDN);
      MpComplex sample(bits);
      mpfr_div(sample.re.get(), tmp.re.get(), t1.get(), MPFR_RNDN);
      mpfr_div(sample.im.get(), tmp.im.get(), t1.get(), MPFR_RNDN);
      impl->mp_samples.push_back(std::move(sample));
      MpReal cr(bits), sr(bits);
      mpfr_div_d(cr.get(), c.get(), rho, MPFR_RNDN);
      mpfr_div_d(sr.get(), sn.get(), rho, MPFR_RNDN);
      impl->mp_cos.push_back(std::move(cr));
      impl->mp_sin.push_back(std::move(sr));
    }
  }
  impl_ = std::move(impl);
}

int ContourKernel::nodes() const noexcept { return static_cast<int>(impl_->z_inv.size()); }

int ContourKernel::precision_bits() const noexcept { return impl_->bits; }

cplx ContourKernel::operator()(double t) const {
  const Impl& k = *impl_;
  // (1/2 pi i) \oint f(z)/z dz = mean of f over equispaced nodes
  if (k.mp_samples.empty()) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < k.samples.size(); ++j) s += k.samples[j] * std::exp(t * k.z_inv[j]);
    return k.prefactor * s;
  }
  const int bits = k.bits;
  MpReal e(bits), t1(bits), t2(bits);
  MpComplex w(bits), term(bits), sum(bits);
  mpfr_set_zero(sum.re.get(), 1);
  mpfr_set_zero(sum.im.get(), 1);
  for (std::size_t j = 0; j < k.mp_samples.size(); ++j) {
    // e^{t/z} = e^{t cos/rho} (cos(t sin/rho) - i sin(t sin/rho))
    mpfr_mul_d(e.get(), k.mp_cos[j].get(), t, MPFR_RNDN);
    mpfr_exp(e.get(), e.get(), MPFR_RNDN);
    mpfr_mul_d(t1.get(), k.mp_sin[j].get(), -t, MPFR_RNDN);
    mpfr_sin_cos(w.im.get(), w.re.get(), t1.get(), MPFR_RNDN);
    mpfr_mul(w.re.get(), w.re.get(), e.get(), MPFR_RNDN);
    mpfr_mul(w.im.get(), w.im.get(), e.get(), MPFR_RNDN);
    mp_mul(term, k.mp_samples[j], w, t1, t2);
    mpfr_add(sum.re.get(), sum.re.get(), term.re.get(), MPFR_RNDN);
    mpfr_add(sum.im.get(), sum.im.get(), term.im.get(), MPFR_RNDN);
  }
  return k.prefactor * cplx(mpfr_get_d(sum.re.get(), MPFR_RNDN), mpfr_get_d(sum.im.get(), MPFR_RNDN));
}

double ContourKernel::magnitude(double t) const {
  const Impl& k = *impl_;
  double s = 0.0;
  for (std::size_t j = 0; j < k.samples.size(); ++j) s += std::abs(k.samples[j]) * std::exp(t * k.log_scale[j]);
  return std::abs(k.prefactor) * s;
}

cplx kernel_K(const ParameterK& param, const OrbitPairings& orbit, const SeriesData& series, double t,
              double rho, int nodes) {
  return ContourKernel(param, orbit, series, rho, nodes)(t);
}

namespace {

constexpr int kMaxChebyshev = 1 << 12;

// Interpolant of K on [0, 1] through Chebyshev-Lobatto points; grids are nested
// under doubling, so each refinement only evaluates K at the new points.
class ChebyshevProxy {
 public:
  ChebyshevProxy(const ContourKernel& kernel, double rel_tol) {
    int n = 32;
    values_.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) values_[i] = kernel(node(i, n));
    for (;;) {
      if (2 * n > kMaxChebyshev)
        throw ConvergenceError("Chebyshev proxy of K did not settle with " + std::to_string(kMaxChebyshev) +
                               " points");
      std::vector<cplx> refined(static_cast<std::size_t>(2 * n) + 1);
      double diff = 0.0;
      double scale = 0.0;
      double floor = 0.0;
      for (int i = 0; i <= 2 * n; ++i) {
        if (i % 2 == 0) {
          refined[i] = values_[i / 2];
        } else {
          const double t = node(i, 2 * n);
          refined[i] = kernel(t);
          diff = std::max(diff, std::abs(refined[i] - (*this)(t)));
          if (kernel.precision_bits() == 53)
            floor = std::max(floor, 64.0 * std::numeric_limits<double>::epsilon() * kernel.magnitude(t));
        }
        scale = std::max(scale, std::abs(refined[i]));
      }
      values_ = std::move(refined);
      n *= 2;
      if (diff <= std::max(rel_tol * scale, floor)) break;
    }
  }

  cplx operator()(double t) const {
    // barycentric formula, weights (-1)^i halved at the ends
    const int n = static_cast<int>(values_.size()) - 1;
    cplx num = 0.0;
    double den = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double diff = t - node(i, n);
      if (diff == 0.0) return values_[i];
      double w = (i % 2 == 0 ? 1.0 : -1.0) / diff;
      if (i == 0 || i == n) w *= 0.5;
      num += w * values_[i];
      den += w;
    }
    return num / den;
  }

  int points() const noexcept { return static_cast<int>(values_.size()); }

 private:
  static double node(int i, int n) { return 0.5 * (1.0 - std::cos(std::numbers::pi * i / n)); }
  std::vector<cplx> values_;
};

// \int_0^1 q u^{q gamma - 1} K(1 - u^q) du on geometric panels, each split in `sub` pieces.
template <class Kernel>
cplx graded_integral(const Kernel& kernel, cplx gamma, int q, int sub, int* evaluations) {
  const GaussRule& rule = gauss_rule();
  const cplx expo = static_cast<double>(q) * gamma - 1.0;
  auto integrand = [&](double u) {
    const double s = std::pow(u, q);
    return static_cast<double>(q) * std::exp(expo * std::log(u)) * kernel(1.0 - s);
  };
  cplx total = 0.0;
  auto panel = [&](double lo, double hi) {
    const double h = (hi - lo) / sub;
    for (int piece = 0; piece < sub; ++piece) {
      const double a = lo + piece * h;
      const double mid = a + 0.5 * h;
      cplx acc = 0.0;
      for (int i = 0; i < kGaussOrder; ++i) acc += rule.w[i] * integrand(mid + 0.5 * h * rule.x[i]);
      total += 0.5 * h * acc;
      *evaluations += kGaussOrder;
    }
  };
  panel(0.0, std::ldexp(1.0, -kGradingLevels));
  for (int l = kGradingLevels; l >= 1; --l) panel(std::ldexp(1.0, -l), std::ldexp(1.0, 1 - l));
  return total;
}

}  // namespace

KernelResult ek_integral(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                         const PlanePoint& y, double tol, const IntegralOptions& options) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  param.require_series();
  const cplx g = param.gamma();
  if (!(g.real() > 0.0)) throw DomainError("integral representation requires Re(gamma) > 0");

  const OrbitPairings orbit = orbit_pairings(group, x, y);
  const double delta = delta_effective(param).delta_effective;
  const RadiusGuard guard = RadiusGuard::make(orbit.a_bound, delta);
  const double rho = guard.unbounded() ? options.rho_scale : options.rho_scale * guard.rho_default;
  if (!guard.unbounded() && !(delta * orbit.a_bound * rho < 1.0))
    throw DomainError("contour radius must stay inside the disk of radius 1/(delta a)");

  const double inner_tol = std::max(1e-3 * tol, 1e-15);
  const int order = truncation_order(param, orbit.a_bound, delta, rho, inner_tol);
  const SeriesData series = a_coeffs(param, orbit, order);

  // contour nodes: double until K(t) is stable at probe points
  const std::array<double, 3> probes{0.0, 0.5, 1.0};
  int nodes = std::max(options.min_nodes, 8);
  std::array<cplx, 3> prev{};
  {
    const ContourKernel k0(param, orbit, series, rho, nodes, inner_tol);
    for (std::size_t i = 0; i < probes.size(); ++i) prev[i] = k0(probes[i]);
  }
  for (;;) {
    if (2 * nodes > kMaxContourNodes)
      throw ConvergenceError("contour quadrature did not settle with " + std::to_string(kMaxContourNodes) +
                             " nodes (delta*a = " + std::to_string(delta * orbit.a_bound) + ")");
    nodes *= 2;
    const ContourKernel kn(param, orbit, series, rho, nodes, inner_tol);
    double diff = 0.0;
    double scale = 1.0;
    double floor = 0.0;
    std::array<cplx, 3> cur{};
    for (std::size_t i = 0; i < probes.size(); ++i) {
      cur[i] = kn(probes[i]);
      diff = std::max(diff, std::abs(cur[i] - prev[i]));
      scale = std::max(scale, std::abs(cur[i]));
      if (kn.precision_bits() == 53)
        floor = std::max(floor, 64.0 * std::numeric_limits<double>::epsilon() * kn.magnitude(probes[i]));
    }
    prev = cur;
    if (diff <= std::max(inner_tol * scale, floor)) break;
  }

  const ContourKernel kernel(param, orbit, series, rho, nodes, inner_tol);
  const ChebyshevProxy proxy(kernel, inner_tol);
  const int q = std::max(1, static_cast<int>(std::ceil(1.0 / g.real())));
  int evaluations = 0;
  cplx value = graded_integral(proxy, g, q, 1, &evaluations);
  double change = 0.0;
  for (int sub = 2;; sub *= 2) {
    if (sub > kMaxSubdivision)
      throw ConvergenceError("t-quadrature did not settle; last change " + std::to_string(change));
    evaluations = 0;
    const cplx refined = graded_integral(proxy, g, q, sub, &evaluations);
    change = std::abs(refined - value);
    value = refined;
    if (change <= tol * std::max(1.0, std::abs(value))) break;
  }
  return {value, KernelMethod::integral, proxy.points(), nodes, change};
}

EmBoundReport check_em_bound(const DihedralGroup& group, const ParameterK& param, const PlanePoint& x,
                             const PlanePoint& y, int max_m, int nu) {
  if (nu < 0) throw DomainError("nu must be a nonnegative integer");
  if (!(param.gamma().real() > -nu))
    throw DomainError("the component bound requires Re(gamma) > -nu");
  if (max_m > kMaxUnscaledDegree) throw RangeError("bound checks are limited to degree " + std::to_string(kMaxUnscaledDegree));
  const OrbitPairings orbit = orbit_pairings(group, x, y);
  EmBoundReport rep;
  rep.delta = delta_effective(param).delta_effective;
  rep.a_bound = orbit.a_bound;
  const double s = rep.delta * orbit.a_bound;
  // |Y_m[0]| = |(1+gamma)_m E_m|, so the Pochhammer factor cancels from the ratio
  StateVector state = initial_state(orbit.n());
  for (int m = 1; m <= max_m; ++m) {
    state = y_step(state, param, orbit);
    double ratio = 0.0;
    if (s > 0.0) {
      ratio = std::abs(state.values.front()) /
              (kHalfE2 * (m + 2.0) * (m + 2.0) * std::exp(m * std::log(s)));
    }
    rep.ratios.push_back(ratio);
    if (ratio > rep.max_ratio || m == 1) {
      rep.max_ratio = ratio;
      rep.argmax = m;
    }
  }
  return rep;
}

double ek_bound_constant(const ParameterK& param, int nu) {
  if (nu < 0) throw DomainError("nu must be a nonnegative integer");
  const cplx g = param.gamma();
  if (!(g.real() > -nu)) throw DomainError("the kernel bound requires Re(gamma) > -nu");
  param.require_regular();
  // log of (e^2/2)(m+2)^2 m! / (|(1+gamma)_m| (m+1)^{nu+2})
  constexpr int kScan = 20000;
  double log_fact_over_poch = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (int m = 0; m <= kScan; ++m) {
    if (m > 0) log_fact_over_poch += std::log(static_cast<double>(m)) - std::log(std::abs(g + static_cast<double>(m)));
    const double v = std::log(kHalfE2) + 2.0 * std::log(m + 2.0) + log_fact_over_poch - (nu + 2.0) * std::log(m + 1.0);
    best = std::max(best, v);
  }
  return std::tgamma(nu + 3.0) * std::exp(best);
}

EkBoundReport check_ek_bound(const DihedralGroup& group, const ParameterK& param,
                             const std::vector<std::pair<PlanePoint, PlanePoint>>& grid, int nu) {
  EkBoundReport rep;
  rep.constant = ek_bound_constant(param, nu);
  rep.points = grid.size();
  const double delta = param.is_zero() ? 1.0 : delta_effective(param).delta_effective;
  rep.ratios = parallel_map<double>(grid.size(), [&](std::size_t i) {
    const auto& [x, y] = grid[i];
    const double s = delta * orbit_pairings(group, x, y).a_bound;
    const cplx ek = ek_series(group, param, x, y, 1e-13).value;
    return std::exp(std::log(std::abs(ek)) - (nu + 2.0) * std::log(s + 1.0) - s);
  });
  for (double r : rep.ratios) rep.sup_ratio = std::max(rep.sup_ratio, r);
  return rep;
}

}  // namespace dunkl
