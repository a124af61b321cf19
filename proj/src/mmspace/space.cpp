#include "bstopo/mmspace/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bstopo/core/error.hpp"

namespace bstopo::mm {
namespace {

void check_weights(const std::vector<Rational>& weights, std::size_t n) {
  if (weights.size() != n) {
    throw MalformedInput("expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
  }
  if (n == 0) throw MalformedInput("space has no points");
  for (std::size_t i = 0; i < n; ++i)
    if (weights[i] <= 0) throw MalformedInput("weight of point " + std::to_string(i) + " is not positive");
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

FiniteMMSpace FiniteMMSpace::from_matrix(std::vector<double> dist, std::vector<Rational> weights, double resolution) {
  const std::size_t n = weights.size();
  check_weights(weights, n);
  if (dist.size() != n * n) throw MalformedInput("distance matrix is not " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i * n + i] != 0.0) throw MalformedInput("nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = dist[i * n + j];
      if (!std::isfinite(d) || d != dist[j * n + i]) {
        throw MalformedInput("matrix not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (!(d > 0.0)) {
        throw MalformedInput("non-positive distance at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  // d(i,k) <= d(i,j) + d(j,k) for every triple, up to rounding of decimal input.
  for (std::size_t j = 0; j < n; ++j) {
    const double* rj = dist.data() + j * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double dij = dist[i * n + j];
      const double* ri = dist.data() + i * n;
      for (std::size_t k = i + 1; k < n; ++k) {
        const double bound = dij + rj[k];
        if (ri[k] > bound + 1e-12 * std::max(1.0, bound)) {
          throw MalformedInput("triangle inequality fails for " + triple(i, j, k) + ": " + format_double(ri[k]) +
                               " > " + format_double(dij) + " + " + format_double(rj[k]));
        }
      }
    }
  }
  FiniteMMSpace s;
  s.geometry_ = Geometry::Matrix;
  s.dist_ = std::move(dist);
  s.weights_ = std::move(weights);
  s.finish(resolution);
  return s;
}

FiniteMMSpace FiniteMMSpace::from_coords(std::size_t dim, std::vector<double> coords, double period,
                                         std::vector<Rational> weights, double resolution) {
  const std::size_t n = weights.size();
  check_weights(weights, n);
  if (dim == 0) throw MalformedInput("coordinate dimension must be positive");
  if (coords.size() != dim * n) throw MalformedInput("expected " + std::to_string(dim * n) + " coordinates");
  if (period < 0.0 || !std::isfinite(period)) throw MalformedInput("torus period must be positive");
  for (double& x : coords) {
    if (!std::isfinite(x)) throw MalformedInput("non-finite coordinate");
    if (period > 0.0) {
      x = std::fmod(x, period);
      if (x < 0.0) x += period;
    }
  }
  FiniteMMSpace s;
  s.geometry_ = period > 0.0 ? Geometry::Torus : Geometry::Flat;
  s.dim_ = dim;
  s.period_ = period;
  s.coords_ = std::move(coords);
  s.weights_ = std::move(weights);
  s.finish(resolution);
  return s;
}

void FiniteMMSpace::finish(double resolution) {
  volume_ = 0;
  for (const auto& w : weights_) volume_ += w;
  const std::size_t n = size();
  if (resolution <= 0.0 && geometry_ != Geometry::Matrix) {
    // Sweep along the first axis: a pair whose axis-0 gap already reaches
    // the best distance so far cannot improve it. On a torus the scan wraps
    // and each pair is met from both ends.
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return coords_[a] < coords_[b]; });
    double best = std::numeric_limits<double>::infinity();
    const std::size_t span = period_ > 0.0 ? n : 0;
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t i = order[a];
      for (std::size_t step = 1; step < n; ++step) {
        const std::size_t b = a + step;
        if (b >= n && span == 0) break;
        const std::size_t j = order[b % n];
        double gap = coords_[j] - coords_[i];
        if (b >= n) gap += period_;
        if (gap >= best) break;
        const double d = dist(i, j);
        if (d <= 0.0) throw MalformedInput("points " + std::to_string(std::min(i, j)) + " and " + std::to_string(std::max(i, j)) + " coincide");
        best = std::min(best, d);
      }
    }
    resolution = std::isfinite(best) ? best : 1.0;
  }
  if (resolution <= 0.0) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      distance_row(i, row);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (row[j] <= 0.0) throw MalformedInput("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        best = std::min(best, row[j]);
      }
    }
    resolution = std::isfinite(best) ? best : 1.0;
  }
  resolution_ = resolution;
}

double FiniteMMSpace::dist(std::size_t i, std::size_t j) const {
  const std::size_t n = size();
  if (geometry_ == Geometry::Matrix) return dist_[i * n + j];
  if (dim_ == 1) {
    double d = std::fabs(coords_[j] - coords_[i]);
    if (period_ > 0.0) d = std::fmin(d, period_ - d);
    return d;
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    double d = std::fabs(coords_[k * n + j] - coords_[k * n + i]);
    if (period_ > 0.0) d = std::fmin(d, period_ - d);
    acc = acc + d * d;
  }
  return std::sqrt(acc);
}

void FiniteMMSpace::distance_row(std::size_t i, std::span<double> out) const {
  const std::size_t n = size();
  if (geometry_ == Geometry::Matrix) {
    std::copy_n(dist_.begin() + static_cast<std::ptrdiff_t>(i * n), n, out.begin());
    return;
  }
  double query[8];
  std::vector<double> big;
  double* q = query;
  if (dim_ > 8) {
    big.resize(dim_);
    q = big.data();
  }
  for (std::size_t k = 0; k < dim_; ++k) q[k] = coords_[k * n + i];
  kernels::distances(block(), std::span<const double>(q, dim_), out);
}

std::vector<double> FiniteMMSpace::distance_row(std::size_t i) const {
  std::vector<double> row(size());
  distance_row(i, row);
  return row;
}

std::vector<double> FiniteMMSpace::dense() const {
  if (geometry_ == Geometry::Matrix) return dist_;
  const std::size_t n = size();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) distance_row(i, std::span<double>(out.data() + i * n, n));
  return out;
}

Rational FiniteMMSpace::volume_of(std::span<const std::uint32_t> points) const {
  Rational total(0);
  for (auto p : points) total += weights_[p];
  return total;
}

FiniteMMSpace make_space(const std::vector<std::vector<double>>& dist, std::vector<Rational> weights) {
  const std::size_t n = dist.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : dist) {
    if (row.size() != n) throw MalformedInput("distance matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteMMSpace::from_matrix(std::move(flat), std::move(weights));
}

Subcloud::Subcloud(const FiniteMMSpace& space, PointSet ids) : space_(&space), ids_(std::move(ids)) {
  if (space.geometry() == FiniteMMSpace::Geometry::Matrix) return;
  const std::size_t n = space.size();
  const std::size_t m = ids_.size();
  coords_.resize(space.dim() * m);
  for (std::size_t k = 0; k < space.dim(); ++k)
    for (std::size_t i = 0; i < m; ++i) coords_[k * m + i] = space.coords()[k * n + ids_[i]];
}

void Subcloud::distances_from(std::size_t point, std::span<double> out) const {
  const auto& s = *space_;
  if (s.geometry() == FiniteMMSpace::Geometry::Matrix) {
    for (std::size_t i = 0; i < ids_.size(); ++i) out[i] = s.dist(point, ids_[i]);
    return;
  }
  const std::size_t n = s.size();
  double query[8];
  std::vector<double> big;
  double* q = query;
  if (s.dim() > 8) {
    big.resize(s.dim());
    q = big.data();
  }
  for (std::size_t k = 0; k < s.dim(); ++k) q[k] = s.coords()[k * n + point];
  const kernels::CoordBlock block{coords_, ids_.size(), s.dim(), s.period()};
  kernels::distances(block, std::span<const double>(q, s.dim()), out);
}

PointSet h_neighbors(const FiniteMMSpace& space, std::size_t i, double h) {
  const auto row = space.distance_row(i);
  PointSet out;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (j != i && within_closed(row[j], h)) out.push_back(static_cast<std::uint32_t>(j));
  return out;
}

PointSet closed_ball(const FiniteMMSpace& space, std::size_t i, double r) {
  const auto row = space.distance_row(i);
  PointSet out;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (within_closed(row[j], r)) out.push_back(static_cast<std::uint32_t>(j));
  return out;
}

}  // namespace bstopo::mm
