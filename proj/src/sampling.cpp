#include "dunkl/sampling.hpp"

#include <cmath>
#include <numbers>

namespace dunkl {

InstanceSampler::InstanceSampler(std::uint64_t seed, SamplingOptions options)
    : engine_(seed), options_(std::move(options)) {}

double InstanceSampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double InstanceSampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int InstanceSampler::pick(const std::vector<int>& values) {
  const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(values.size()));
  return values[std::min(i, values.size() - 1)];
}

cplx InstanceSampler::parameter(int n) {
  for (;;) {
    const cplx k(uniform(options_.k_re_min, options_.k_re_max),
                 options_.k_im_max > 0.0 ? uniform(-options_.k_im_max, options_.k_im_max) : 0.0);
    const ParameterK p(n, k);
    if (p.regularity_margin() >= options_.regularity_margin &&
        std::abs(p.gamma()) >= options_.regularity_margin)
      return k;
  }
}

PlanePoint InstanceSampler::real_point(double max_norm) {
  const double r = max_norm * std::sqrt(uniform());
  const double t = 2.0 * std::numbers::pi * uniform();
  return {r * std::cos(t), r * std::sin(t)};
}

Instance InstanceSampler::next() {
  Instance inst;
  inst.n = pick(options_.orders);
  inst.k = parameter(inst.n);
  inst.x = real_point(options_.max_norm);
  if (uniform() < options_.complex_y_fraction) {
    const PlanePoint re = real_point(options_.max_norm / std::sqrt(2.0));
    const PlanePoint im = real_point(options_.max_norm / std::sqrt(2.0));
    inst.y = {cplx(re.c0.real(), im.c0.real()), cplx(re.c1.real(), im.c1.real())};
  } else {
    inst.y = real_point(options_.max_norm);
  }
  if (uniform() < options_.sigma_fraction) {
    if (uniform() < 0.5)
      inst.x.c1 = 0.0;
    else
      inst.y.c1 = 0.0;
  }
  return inst;
}

}  // namespace dunkl
