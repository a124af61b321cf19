#include <cmath>
#include <limits>

#include "bstopo/kernels/kernels.hpp"

namespace bstopo::kernels::scalar {

void distances(const CoordBlock& block, const double* query, double* out) {
  const std::size_t n = block.n;
  const double* coords = block.coords.data();
  const double period = block.period;
  if (block.dim == 1) {
    const double q = query[0];
    for (std::size_t i = 0; i < n; ++i) {
      double d = std::fabs(coords[i] - q);
      if (period > 0.0) d = std::fmin(d, period - d);
      out[i] = d;
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  for (std::size_t k = 0; k < block.dim; ++k) {
    const double* axis = coords + k * n;
    const double q = query[k];
    for (std::size_t i = 0; i < n; ++i) {
      double d = std::fabs(axis[i] - q);
      if (period > 0.0) d = std::fmin(d, period - d);
      out[i] = out[i] + d * d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(out[i]);
}

void min_inplace(double* acc, const double* values, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::fmin(acc[i], values[i]);
}

double max_value(const double* values, std::size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) best = std::fmax(best, values[i]);
  return best;
}

void select_below(const double* values, std::size_t n, double threshold, bool strict,
                  std::vector<std::uint32_t>& out) {
  if (strict) {
    for (std::size_t i = 0; i < n; ++i)
      if (values[i] < threshold) out.push_back(static_cast<std::uint32_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i)
      if (values[i] <= threshold) out.push_back(static_cast<std::uint32_t>(i));
  }
}

}  // namespace bstopo::kernels::scalar
