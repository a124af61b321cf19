#include "bstopo/sampling/poisson.hpp"

#include <algorithm>
#include <cmath>

#include "bstopo/core/error.hpp"
#include "bstopo/core/random.hpp"

namespace bstopo::sampling {

PoissonSample poisson_sample(const mm::FiniteMMSpace& space, double intensity, std::uint64_t seed,
                             std::uint32_t stage) {
  if (!(intensity >= 0.0) || !std::isfinite(intensity)) throw ContractError("intensity must be finite and non-negative");
  PoissonSample out;
  if (intensity == 0.0) return out;
  out.config.stages.clear();
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double mean = intensity * to_double(space.weight(i));
    const auto count = poisson_draw(mean, seed, Stream::PoissonCount, {stage, i});
    if (count == 0) continue;
    out.arrivals += count;
    double mark = 0.0;
    for (std::uint32_t occ = 0; occ < count; ++occ)
      mark = std::max(mark, uniform_open_closed(seed, Stream::Mark, {stage, i, occ}));
    out.config.points.push_back(static_cast<std::uint32_t>(i));
    out.config.marks.push_back(mark);
    out.config.stages.push_back(stage);
  }
  return out;
}

}  // namespace bstopo::sampling
