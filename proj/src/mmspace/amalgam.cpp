#include "bstopo/mmspace/amalgam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bstopo/core/error.hpp"

namespace bstopo::mm {

Amalgam amalgamate(const AmalgamSpec& spec) {
  if (spec.parts.empty()) throw MalformedInput("amalgamate: no parts");
  std::vector<std::size_t> offset;
  std::vector<std::size_t> part_of;
  std::size_t total = 0;
  for (std::size_t j = 0; j < spec.parts.size(); ++j) {
    offset.push_back(total);
    total += spec.parts[j].size();
    part_of.insert(part_of.end(), spec.parts[j].size(), j);
  }
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(total * total, inf);
  for (std::size_t i = 0; i < total; ++i) d[i * total + i] = 0.0;
  for (std::size_t j = 0; j < spec.parts.size(); ++j) {
    const auto& part = spec.parts[j];
    const auto dense = part.dense();
    const std::size_t m = part.size();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) d[(offset[j] + a) * total + offset[j] + b] = dense[a * m + b];
  }
  for (std::size_t l = 0; l < spec.links.size(); ++l) {
    const auto& link = spec.links[l];
    const std::size_t m = link.points.size();
    const std::string name = "link " + std::to_string(l);
    if (link.dist.size() != m * m) throw MalformedInput(name + ": table is not square");
    for (auto p : link.points)
      if (p >= total) throw MalformedInput(name + ": point " + std::to_string(p) + " out of range");
    for (std::size_t a = 0; a < m; ++a) {
      if (link.dist[a * m + a] != 0.0) throw MalformedInput(name + ": nonzero diagonal");
      for (std::size_t b = 0; b < m; ++b) {
        const double v = link.dist[a * m + b];
        if (!(v >= 0.0) || !std::isfinite(v)) throw MalformedInput(name + ": negative or non-finite entry");
        if (v != link.dist[b * m + a]) throw MalformedInput(name + ": table not symmetric");
        const auto x = link.points[a];
        const auto y = link.points[b];
        if (x != y && part_of[x] == part_of[y] && v != d[x * total + y]) {
          throw MalformedInput(name + ": disagrees with part " + std::to_string(part_of[x]) + " on (" +
                               std::to_string(x) + "," + std::to_string(y) + ")");
        }
        d[x * total + y] = std::min(d[x * total + y], v);
      }
    }
  }
  // Floyd-Warshall.
  for (std::size_t k = 0; k < total; ++k) {
    const double* rk = d.data() + k * total;
    for (std::size_t i = 0; i < total; ++i) {
      const double dik = d[i * total + k];
      if (dik == inf) continue;
      double* ri = d.data() + i * total;
      for (std::size_t j = 0; j < total; ++j) ri[j] = std::min(ri[j], dik + rk[j]);
    }
  }
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (d[i * total + j] == inf) {
        throw MalformedInput("amalgamate: points " + std::to_string(i) + " and " + std::to_string(j) +
                             " are not joined by any chain");
      }
    }
  }
  for (std::size_t j = 0; j < spec.parts.size(); ++j) {
    const auto& part = spec.parts[j];
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = 0; b < part.size(); ++b)
      {
        double& v = d[(offset[j] + a) * total + offset[j] + b];
        const double want = part.dist(a, b);
        // Chains through the part itself may round below the stored entry.
        if (v < want - 1e-12 * std::max(1.0, want)) {
          throw MalformedInput("amalgamate: links shorten distances inside part " + std::to_string(j));
        }
        v = want;
      }
  }

  Amalgam out;
  out.index_of.assign(total, 0);
  std::vector<std::size_t> reps;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < total; ++i) {
    const Rational w = spec.parts[part_of[i]].weight(i - offset[part_of[i]]);
    bool merged = false;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (d[reps[r] * total + i] == 0.0) {
        out.index_of[i] = r;
        weights[r] += w;
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.index_of[i] = reps.size();
      reps.push_back(i);
      weights.push_back(w);
    }
  }
  const std::size_t n = reps.size();
  std::vector<double> dist(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      dist[a * n + b] = std::min(d[reps[a] * total + reps[b]], d[reps[b] * total + reps[a]]);
  out.space = FiniteMMSpace::from_matrix(std::move(dist), std::move(weights));
  return out;
}

}  // namespace bstopo::mm
