#pragma once

#include <vector>

#include "dunkl/dihedral.hpp"
#include "dunkl/sampling.hpp"
#include "oracles.hpp"

inline oracle::Vec to_vec(const dunkl::PlanePoint& p) { return {p.c0, p.c1}; }

// Instance with x, y rescaled so that a(x, y) <= a_max.
inline dunkl::Instance scaled_instance(dunkl::InstanceSampler& s, double a_max) {
  dunkl::Instance in = s.next();
  const double a = dunkl::orbit_pairings(dunkl::DihedralGroup(in.n), in.x, in.y).a_bound;
  if (a > a_max) {
    const double f = std::sqrt(a_max / a);
    in.x = f * in.x;
    in.y = f * in.y;
  }
  return in;
}

inline std::vector<dunkl::Instance> instances(std::uint64_t seed, int count, double a_max = 2.0,
                                              dunkl::SamplingOptions opts = {}) {
  dunkl::InstanceSampler s(seed, opts);
  std::vector<dunkl::Instance> out;
  for (int i = 0; i < count; ++i) out.push_back(scaled_instance(s, a_max));
  return out;
}
