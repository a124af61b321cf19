#pragma once

#include <cstdint>

#include "bstopo/mmspace/space.hpp"
#include "bstopo/sampling/poisson.hpp"

namespace bstopo::sampling {

struct ThinningParams {
  double eps = 1.0;
  std::uint32_t stages = 5;
  double intensity = 1.0;
  std::uint64_t seed = 0;
};

// 1 on [0, eps], 0 on [2 eps, inf), linear in between.
double kernel_phi(double t, double eps);

// Symmetric pair variable X(s, t) in (0, 1] for candidates identified by
// (stage, point).
double pair_variable(std::uint64_t seed, std::uint32_t stage_a, std::uint32_t point_a, std::uint32_t stage_b,
                     std::uint32_t point_b);

// Staged thinning. Stage j draws Poisson candidates; a candidate x dies if
// some other stage-j candidate y with (mark y, id y) > (mark x, id x) has
// phi(dist(x,y)) >= X(x,y), or some earlier survivor y has
// phi(dist(x,y)) >= X(x,y). Survivors of all stages are returned; the result
// is eps-separated.
PointConfig thin(const mm::FiniteMMSpace& space, const ThinningParams& params);

struct SeparationReport {
  bool separated = true;
  // max over space points of the distance to the nearest config point;
  // +inf for an empty config.
  double covering_radius = 0.0;
};

SeparationReport separated_covering_check(const mm::FiniteMMSpace& space, const PointConfig& config, double eps);

}  // namespace bstopo::sampling
