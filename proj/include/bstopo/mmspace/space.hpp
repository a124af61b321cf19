#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bstopo/core/rational.hpp"
#include "bstopo/kernels/kernels.hpp"

namespace bstopo::mm {

using PointSet = std::vector<std::uint32_t>;

// Relative slack used for closed comparisons against radii that are meant to
// land exactly on lattice distances (h-adjacency, collars, closed balls).
inline constexpr double kClosedSlack = 1e-9;
inline bool within_closed(double d, double r) { return d <= r + kClosedSlack * (r > 1.0 ? r : 1.0); }

// Finite metric measure space. The metric is either an explicit symmetric
// matrix or induced by coordinates (Euclidean, optionally on a torus of
// period L per axis). Weights are exact; distances are binary64.
class FiniteMMSpace {
 public:
  enum class Geometry { Matrix, Flat, Torus };

  FiniteMMSpace() = default;

  // Validates symmetry, zero diagonal, positive off-diagonal entries, the
  // triangle inequality and positive weights; throws MalformedInput naming a
  // witness. resolution <= 0 means "smallest positive distance".
  static FiniteMMSpace from_matrix(std::vector<double> dist, std::vector<Rational> weights, double resolution = 0.0);
  // coords[d * n + i] is coordinate d of point i. period == 0 gives flat
  // space. Distinct points are required.
  static FiniteMMSpace from_coords(std::size_t dim, std::vector<double> coords, double period,
                                   std::vector<Rational> weights, double resolution = 0.0);

  std::size_t size() const { return weights_.size(); }
  Geometry geometry() const { return geometry_; }
  std::size_t dim() const { return dim_; }
  double period() const { return period_; }
  double resolution() const { return resolution_; }

  double dist(std::size_t i, std::size_t j) const;
  // out[j] = dist(i, j) for every j.
  void distance_row(std::size_t i, std::span<double> out) const;
  std::vector<double> distance_row(std::size_t i) const;
  // Full n*n matrix (row-major).
  std::vector<double> dense() const;

  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::size_t i) const { return weights_[i]; }
  Rational volume() const { return volume_; }
  Rational volume_of(std::span<const std::uint32_t> points) const;

  const std::vector<double>& matrix() const { return dist_; }
  const std::vector<double>& coords() const { return coords_; }
  kernels::CoordBlock block() const { return {coords_, size(), dim_, period_}; }

  std::vector<std::string> labels;

 private:
  void finish(double resolution);

  Geometry geometry_ = Geometry::Matrix;
  std::vector<double> dist_;
  std::vector<double> coords_;
  std::size_t dim_ = 0;
  double period_ = 0.0;
  std::vector<Rational> weights_;
  Rational volume_{0};
  double resolution_ = 0.0;
};

// A subset of a space's points with their coordinates gathered into one
// contiguous block, so distance rows against the subset run through the
// vector kernels without touching the rest of the space.
class Subcloud {
 public:
  Subcloud(const FiniteMMSpace& space, PointSet ids);

  std::size_t size() const { return ids_.size(); }
  const PointSet& ids() const { return ids_; }
  // out[k] = dist(point, ids[k]) for any point of the ambient space.
  void distances_from(std::size_t point, std::span<double> out) const;

 private:
  const FiniteMMSpace* space_;
  PointSet ids_;
  std::vector<double> coords_;
};

// Row-major matrix form of from_matrix. Throws MalformedInput on a
// non-square matrix or a weight vector of the wrong length.
FiniteMMSpace make_space(const std::vector<std::vector<double>>& dist, std::vector<Rational> weights);

// Points at distance <= h (with slack) from i, excluding i.
PointSet h_neighbors(const FiniteMMSpace& space, std::size_t i, double h);
// Closed ball around i, including i.
PointSet closed_ball(const FiniteMMSpace& space, std::size_t i, double r);

}  // namespace bstopo::mm
