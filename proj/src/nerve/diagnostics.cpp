#include "bstopo/nerve/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bstopo/core/error.hpp"
#include "bstopo/core/random.hpp"

namespace bstopo::nerve {
namespace {

double ball_volume(const mm::FiniteMMSpace& space, const std::vector<double>& row, double r) {
  Rational v(0);
  for (std::size_t i = 0; i < row.size(); ++i)
    if (mm::within_closed(row[i], r)) v += space.weight(i);
  return to_double(v);
}

}  // namespace

double estimate_eps(const mm::FiniteMMSpace& space, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw ContractError("estimate_eps: samples must be positive");
  const std::size_t n = space.size();
  const double h = space.resolution();
  if (n < 2 || !(h > 0)) throw ContractError("estimate_eps: needs at least two points");
  std::vector<double> row(n);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const auto p = hash_ids(seed, Stream::Diagnostic, {0, k}) % n;
    space.distance_row(p, row);
    const double reach = *std::max_element(row.begin(), row.end());
    double r = h;
    double peak = 0.0;
    double last = r;
    double v = ball_volume(space, row, r);
    while (r <= reach) {
      const double v2 = ball_volume(space, row, 2 * r);
      const double g = std::log2(v2 / v);
      if (g < 0.75 * peak) break;
      peak = std::max(peak, g);
      last = r;
      r *= 2;
      v = v2;
    }
    best = std::min(best, last);
  }
  return best / 20.0;
}

MidpointReport midpoint_spot_check(const mm::FiniteMMSpace& space, double max_dist, std::size_t samples,
                                   std::uint64_t seed) {
  const std::size_t n = space.size();
  const double h = space.resolution();
  MidpointReport out;
  if (n < 2) return out;
  std::vector<double> rx(n), ry(n);
  std::vector<std::size_t> near;
  std::size_t total = 0, clustered = 0;
  for (std::size_t t = 0; out.pairs < samples && t < 20 * samples; ++t) {
    const auto x = hash_ids(seed, Stream::Diagnostic, {1, t, 0}) % n;
    const auto y = hash_ids(seed, Stream::Diagnostic, {1, t, 1}) % n;
    if (x == y) continue;
    const double d = space.dist(x, y);
    if (d > max_dist) continue;
    space.distance_row(x, rx);
    space.distance_row(y, ry);
    near.clear();
    for (std::size_t m = 0; m < n; ++m)
      if (std::fabs(rx[m] - d / 2) <= h && std::fabs(ry[m] - d / 2) <= h) near.push_back(m);
    double spread = 0.0;
    for (std::size_t i = 0; i < near.size(); ++i)
      for (std::size_t j = i + 1; j < near.size(); ++j) spread = std::max(spread, space.dist(near[i], near[j]));
    ++out.pairs;
    total += near.size();
    out.max_multiplicity = std::max(out.max_multiplicity, near.size());
    out.max_spread = std::max(out.max_spread, spread);
    clustered += spread <= 4 * h;
  }
  if (out.pairs > 0) {
    out.mean_multiplicity = static_cast<double>(total) / static_cast<double>(out.pairs);
    out.clustered_fraction = static_cast<double>(clustered) / static_cast<double>(out.pairs);
  }
  return out;
}

}  // namespace bstopo::nerve
