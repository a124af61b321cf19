#include "bstopo/sampling/thinning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bstopo/core/error.hpp"
#include "bstopo/core/random.hpp"

namespace bstopo::sampling {

double kernel_phi(double t, double eps) {
  if (t <= eps) return 1.0;
  if (t >= 2.0 * eps) return 0.0;
  return (2.0 * eps - t) / eps;
}

double pair_variable(std::uint64_t seed, std::uint32_t stage_a, std::uint32_t point_a, std::uint32_t stage_b,
                     std::uint32_t point_b) {
  std::uint64_t a = (std::uint64_t{stage_a} << 32) | point_a;
  std::uint64_t b = (std::uint64_t{stage_b} << 32) | point_b;
  if (b < a) std::swap(a, b);
  return uniform_open_closed(seed, Stream::PairVariable, {a, b});
}

PointConfig thin(const mm::FiniteMMSpace& space, const ThinningParams& params) {
  if (!(params.eps > 0.0)) throw ContractError("thin: eps must be positive");
  if (params.stages == 0) throw ContractError("thin: at least one stage is required");
  const double eps = params.eps;
  PointConfig kept;
  std::vector<double> row;
  for (std::uint32_t stage = 1; stage <= params.stages; ++stage) {
    const auto cand = poisson_sample(space, params.intensity, params.seed, stage).config;
    if (cand.size() == 0) continue;
    // Everything a candidate can interact with: its peers and prior survivors.
    mm::PointSet ids(cand.points);
    ids.insert(ids.end(), kept.points.begin(), kept.points.end());
    const mm::Subcloud cloud(space, ids);
    row.resize(ids.size());
    std::vector<char> alive(cand.size(), 1);
    std::vector<std::uint32_t> near;
    for (std::size_t x = 0; x < cand.size(); ++x) {
      cloud.distances_from(cand.points[x], row);
      near.clear();
      kernels::select_below(row, 2.0 * eps, true, near);
      for (std::size_t at = 0; at < near.size() && alive[x]; ++at) {
        const std::size_t y = near[at];
        if (y == x) continue;
        const double phi = kernel_phi(row[y], eps);
        if (phi == 0.0) continue;
        if (y < cand.size()) {
          const bool higher = cand.marks[y] > cand.marks[x] ||
                              (cand.marks[y] == cand.marks[x] && cand.points[y] > cand.points[x]);
          if (!higher) continue;
          if (phi >= pair_variable(params.seed, stage, cand.points[x], stage, cand.points[y])) alive[x] = 0;
        } else {
          const std::size_t k = y - cand.size();
          if (phi >= pair_variable(params.seed, stage, cand.points[x], kept.stages[k], kept.points[k])) alive[x] = 0;
        }
      }
    }
    for (std::size_t x = 0; x < cand.size(); ++x) {
      if (!alive[x]) continue;
      kept.points.push_back(cand.points[x]);
      kept.marks.push_back(cand.marks[x]);
      kept.stages.push_back(stage);
    }
  }
  // Sort by point index; stages never share a point because a repeat is at
  // distance 0 from a survivor.
  std::vector<std::size_t> order(kept.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return kept.points[a] < kept.points[b]; });
  PointConfig out;
  for (auto i : order) {
    out.points.push_back(kept.points[i]);
    out.marks.push_back(kept.marks[i]);
    out.stages.push_back(kept.stages[i]);
  }
  return out;
}

SeparationReport separated_covering_check(const mm::FiniteMMSpace& space, const PointConfig& config, double eps) {
  SeparationReport out;
  if (config.size() == 0) {
    out.covering_radius = std::numeric_limits<double>::infinity();
    return out;
  }
  const mm::Subcloud cloud(space, config.points);
  std::vector<double> row(config.size());
  for (std::size_t i = 0; i < config.size() && out.separated; ++i) {
    cloud.distances_from(config.points[i], row);
    for (std::size_t j = 0; j < config.size(); ++j) {
      if (j != i && !(row[j] > eps)) {
        out.separated = false;
        break;
      }
    }
  }
  std::vector<double> nearest(space.size(), std::numeric_limits<double>::infinity());
  std::vector<double> full(space.size());
  for (auto p : config.points) {
    space.distance_row(p, full);
    kernels::min_inplace(nearest, full);
  }
  out.covering_radius = kernels::max_value(nearest);
  return out;
}

}  // namespace bstopo::sampling
