#pragma once

#include <cstddef>
#include <cstdint>

#include "bstopo/mmspace/space.hpp"

namespace bstopo::nerve {

// Heuristic scale for net_to_nerve. For each sampled point p the closed-ball
// volume V is read on the radii h, 2h, 4h, ... (h the resolution) and the
// growth exponent log2 V(2r)/V(r) is tracked. R_p is the last radius before
// the exponent falls below 3/4 of its running maximum; the estimate is
// min_p R_p / 20, since the degree bound looks at balls of radius 20 eps.
// Not a canonical rule: spaces with no saturation return the largest radius
// probed over 20.
double estimate_eps(const mm::FiniteMMSpace& space, std::size_t samples, std::uint64_t seed);

struct MidpointReport {
  std::size_t pairs = 0;
  double mean_multiplicity = 0.0;  // near-midpoints per pair
  std::size_t max_multiplicity = 0;
  double max_spread = 0.0;         // largest diameter of a near-midpoint set
  double clustered_fraction = 0.0;  // pairs whose near-midpoints span at most 4h
};

// Samples pairs x != y with dist(x, y) <= max_dist and collects the points m
// with |dist(x, m) - d/2| <= h and |dist(m, y) - d/2| <= h. A clustered set
// is the discrete shadow of a unique midpoint; nothing is asserted about the
// continuum.
MidpointReport midpoint_spot_check(const mm::FiniteMMSpace& space, double max_dist, std::size_t samples,
                                   std::uint64_t seed);

}  // namespace bstopo::nerve
