#include <immintrin.h>

#include <cmath>
#include <limits>

#include "bstopo/kernels/kernels.hpp"

namespace bstopo::kernels::avx2 {
namespace {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

// fmin semantics on non-NaN inputs; the scalar path uses std::fmin.
inline __m256d wrap(__m256d d, __m256d period) { return _mm256_min_pd(d, _mm256_sub_pd(period, d)); }

}  // namespace

void distances(const CoordBlock& block, const double* query, double* out) {
  const std::size_t n = block.n;
  const double* coords = block.coords.data();
  const bool periodic = block.period > 0.0;
  const __m256d period = _mm256_set1_pd(block.period);
  const std::size_t vec_end = n - n % 4;

  if (block.dim == 1) {
    const __m256d q = _mm256_set1_pd(query[0]);
    for (std::size_t i = 0; i < vec_end; i += 4) {
      __m256d d = abs_pd(_mm256_sub_pd(_mm256_loadu_pd(coords + i), q));
      if (periodic) d = wrap(d, period);
      _mm256_storeu_pd(out + i, d);
    }
    for (std::size_t i = vec_end; i < n; ++i) {
      double d = std::fabs(coords[i] - query[0]);
      if (periodic) d = std::fmin(d, block.period - d);
      out[i] = d;
    }
    return;
  }

  for (std::size_t i = 0; i < vec_end; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < block.dim; ++k) {
      __m256d d = abs_pd(_mm256_sub_pd(_mm256_loadu_pd(coords + k * n + i), _mm256_set1_pd(query[k])));
      if (periodic) d = wrap(d, period);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(acc));
  }
  for (std::size_t i = vec_end; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < block.dim; ++k) {
      double d = std::fabs(coords[k * n + i] - query[k]);
      if (periodic) d = std::fmin(d, block.period - d);
      acc = acc + d * d;
    }
    out[i] = std::sqrt(acc);
  }
}

void min_inplace(double* acc, const double* values, std::size_t n) {
  const std::size_t vec_end = n - n % 4;
  for (std::size_t i = 0; i < vec_end; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_min_pd(_mm256_loadu_pd(values + i), _mm256_loadu_pd(acc + i)));
  }
  for (std::size_t i = vec_end; i < n; ++i) acc[i] = std::fmin(acc[i], values[i]);
}

double max_value(const double* values, std::size_t n) {
  const std::size_t vec_end = n - n % 4;
  __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < vec_end; i += 4) best = _mm256_max_pd(best, _mm256_loadu_pd(values + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (std::size_t i = vec_end; i < n; ++i) out = std::fmax(out, values[i]);
  return out;
}

void select_below(const double* values, std::size_t n, double threshold, bool strict,
                  std::vector<std::uint32_t>& out) {
  const std::size_t vec_end = n - n % 4;
  const __m256d t = _mm256_set1_pd(threshold);
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d v = _mm256_loadu_pd(values + i);
    const __m256d hit = strict ? _mm256_cmp_pd(v, t, _CMP_LT_OQ) : _mm256_cmp_pd(v, t, _CMP_LE_OQ);
    int mask = _mm256_movemask_pd(hit);
    while (mask != 0) {
      const int lane = __builtin_ctz(static_cast<unsigned>(mask));
      out.push_back(static_cast<std::uint32_t>(i + lane));
      mask &= mask - 1;
    }
  }
  for (std::size_t i = vec_end; i < n; ++i) {
    if (strict ? values[i] < threshold : values[i] <= threshold) out.push_back(static_cast<std::uint32_t>(i));
  }
}

}  // namespace bstopo::kernels::avx2
