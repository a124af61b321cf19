#include <atomic>
#include <cassert>

#include "bstopo/kernels/kernels.hpp"

namespace bstopo::kernels {
namespace {

std::atomic<int> forced{-1};

}  // namespace

bool avx2_supported() {
#if defined(BSTOPO_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

Path active_path() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Path>(f);
  return avx2_supported() ? Path::Avx2 : Path::Scalar;
}

void force_path(std::optional<Path> path) {
  if (path && *path == Path::Avx2 && !avx2_supported()) path = Path::Scalar;
  forced.store(path ? static_cast<int>(*path) : -1, std::memory_order_relaxed);
}

#if defined(BSTOPO_HAVE_AVX2)
#define BSTOPO_DISPATCH(call_avx2, call_scalar) \
  if (active_path() == Path::Avx2) {            \
    call_avx2;                                  \
  } else {                                      \
    call_scalar;                                \
  }
#else
#define BSTOPO_DISPATCH(call_avx2, call_scalar) call_scalar;
#endif

void distances(const CoordBlock& block, std::span<const double> query, std::span<double> out) {
  assert(query.size() >= block.dim && out.size() >= block.n);
  BSTOPO_DISPATCH(avx2::distances(block, query.data(), out.data()),
                  scalar::distances(block, query.data(), out.data()))
}

void min_inplace(std::span<double> acc, std::span<const double> values) {
  assert(acc.size() == values.size());
  BSTOPO_DISPATCH(avx2::min_inplace(acc.data(), values.data(), acc.size()),
                  scalar::min_inplace(acc.data(), values.data(), acc.size()))
}

double max_value(std::span<const double> values) {
#if defined(BSTOPO_HAVE_AVX2)
  if (active_path() == Path::Avx2) return avx2::max_value(values.data(), values.size());
#endif
  return scalar::max_value(values.data(), values.size());
}

void select_below(std::span<const double> values, double threshold, bool strict,
                  std::vector<std::uint32_t>& out) {
  BSTOPO_DISPATCH(avx2::select_below(values.data(), values.size(), threshold, strict, out),
                  scalar::select_below(values.data(), values.size(), threshold, strict, out))
}

}  // namespace bstopo::kernels
