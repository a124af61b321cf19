#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bstopo/mmspace/space.hpp"

namespace bstopo::sampling {

// Configuration of distinct space points with marks in (0, 1] and the
// 1-based stage that produced each point. Entries are sorted by point index.
struct PointConfig {
  mm::PointSet points;
  std::vector<double> marks;
  std::vector<std::uint32_t> stages;

  std::size_t size() const { return points.size(); }
};

struct PoissonSample {
  PointConfig config;
  // Number of arrivals before collapsing repeats at one atom.
  std::uint64_t arrivals = 0;
};

// Poisson(intensity * weight(i)) arrivals at every point i; an atom with at
// least one arrival is kept once, with the largest of its arrival marks.
// `stage` separates independent draws under one seed.
PoissonSample poisson_sample(const mm::FiniteMMSpace& space, double intensity, std::uint64_t seed,
                             std::uint32_t stage = 1);

}  // namespace bstopo::sampling
