#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dunkl/dihedral.hpp"
#include "dunkl/parameter.hpp"

namespace dunkl {

struct Instance {
  int n = 2;
  cplx k;
  PlanePoint x;
  PlanePoint y;
};

struct SamplingOptions {
  std::vector<int> orders{2, 3, 4, 5, 7};
  double max_norm = 2.0;          // bound on ||x|| and ||y||
  double k_re_min = -0.3;
  double k_re_max = 1.2;
  double k_im_max = 0.5;          // 0 gives real k
  double regularity_margin = 0.1; // distance of 2 gamma to the negative integers, and of gamma to 0
  double complex_y_fraction = 0.25;
  double sigma_fraction = 0.2;    // instances with x or y on the mirror of sigma
};

/// Reproducible instance generator. Uniform variates are built directly from
/// the 64-bit engine output so that a seed gives the same stream everywhere.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed, SamplingOptions options = {});

  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);
  int pick(const std::vector<int>& values);
  cplx parameter(int n);                 // k with the configured regularity margin
  PlanePoint real_point(double max_norm);
  Instance next();

 private:
  std::mt19937_64 engine_;
  SamplingOptions options_;
};

}  // namespace dunkl
