#pragma once

// Data-parallel inner loops over point clouds. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant chosen at runtime.
// Both variants perform the same IEEE operations in the same order, so their
// outputs agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bstopo::kernels {

enum class Path { Scalar, Avx2 };

// Coordinates in structure-of-arrays layout: coordinate d of point i is
// coords[d * n + i]. period == 0 means flat space, otherwise every axis wraps
// with that period.
struct CoordBlock {
  std::span<const double> coords;
  std::size_t n = 0;
  std::size_t dim = 0;
  double period = 0.0;
};

bool avx2_supported();
Path active_path();
// Pins the dispatch (tests and benchmarks); std::nullopt restores detection.
void force_path(std::optional<Path> path);

// out[i] = dist(point i, query).
void distances(const CoordBlock& block, std::span<const double> query, std::span<double> out);

// acc[i] = min(acc[i], values[i]).
void min_inplace(std::span<double> acc, std::span<const double> values);

double max_value(std::span<const double> values);

// Appends every i with values[i] < threshold (strict) or <= threshold.
void select_below(std::span<const double> values, double threshold, bool strict,
                  std::vector<std::uint32_t>& out);

namespace scalar {
void distances(const CoordBlock& block, const double* query, double* out);
void min_inplace(double* acc, const double* values, std::size_t n);
double max_value(const double* values, std::size_t n);
void select_below(const double* values, std::size_t n, double threshold, bool strict,
                  std::vector<std::uint32_t>& out);
}  // namespace scalar

namespace avx2 {
void distances(const CoordBlock& block, const double* query, double* out);
void min_inplace(double* acc, const double* values, std::size_t n);
double max_value(const double* values, std::size_t n);
void select_below(const double* values, std::size_t n, double threshold, bool strict,
                  std::vector<std::uint32_t>& out);
}  // namespace avx2

}  // namespace bstopo::kernels
