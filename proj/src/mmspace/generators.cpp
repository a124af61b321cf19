#include "bstopo/mmspace/generators.hpp"

#include <limits>
#include <queue>
#include <string>

#include "bstopo/core/error.hpp"

namespace bstopo::mm {
namespace {

std::size_t steps(const Rational& length, const Rational& h, const char* what) {
  if (h <= 0) throw ContractError(std::string(what) + ": resolution must be positive");
  if (length <= 0) throw ContractError(std::string(what) + ": length must be positive");
  const Rational k = length / h;
  if (k.denominator() != 1) throw ContractError(std::string(what) + ": resolution does not divide the length");
  if (k < 3) throw ContractError(std::string(what) + ": fewer than 3 points per axis");
  return static_cast<std::size_t>(k.numerator());
}

}  // namespace

FiniteMMSpace circle_space(const Rational& circumference, const Rational& resolution) {
  const std::size_t k = steps(circumference, resolution, "circle_space");
  const double h = to_double(resolution);
  std::vector<double> coords(k);
  for (std::size_t i = 0; i < k; ++i) coords[i] = static_cast<double>(i) * h;
  return FiniteMMSpace::from_coords(1, std::move(coords), to_double(circumference),
                                    std::vector<Rational>(k, resolution), h);
}

FiniteMMSpace torus_space(const Rational& side, const Rational& resolution) {
  const std::size_t k = steps(side, resolution, "torus_space");
  const double h = to_double(resolution);
  const std::size_t n = k * k;
  std::vector<double> coords(2 * n);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t i = torus_index(k, x, y);
      coords[i] = static_cast<double>(x) * h;
      coords[n + i] = static_cast<double>(y) * h;
    }
  }
  return FiniteMMSpace::from_coords(2, std::move(coords), to_double(side),
                                    std::vector<Rational>(n, resolution * resolution), h);
}

FiniteMMSpace metric_graph_space(std::size_t vertex_count, const std::vector<GraphEdge>& edges,
                                 const Rational& resolution) {
  if (resolution <= 0) throw ContractError("metric_graph_space: resolution must be positive");
  if (vertex_count == 0) throw MalformedInput("metric_graph_space: graph has no vertices");
  // Unit-step adjacency over the subdivided graph.
  std::vector<std::vector<std::uint32_t>> adj(vertex_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    if (edge.tail >= vertex_count || edge.head >= vertex_count) {
      throw MalformedInput("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (edge.length <= 0) throw MalformedInput("edge " + std::to_string(e) + " has non-positive length");
    const Rational k = edge.length / resolution;
    if (k.denominator() != 1) {
      throw MalformedInput("edge " + std::to_string(e) + " length is not a multiple of the resolution");
    }
    const auto m = static_cast<std::size_t>(k.numerator());
    std::uint32_t prev = static_cast<std::uint32_t>(edge.tail);
    for (std::size_t s = 1; s < m; ++s) {
      const auto id = static_cast<std::uint32_t>(adj.size());
      adj.emplace_back();
      adj[prev].push_back(id);
      adj[id].push_back(prev);
      prev = id;
    }
    const auto head = static_cast<std::uint32_t>(edge.head);
    if (prev != head || m > 1) {
      adj[prev].push_back(head);
      adj[head].push_back(prev);
    }
  }
  const std::size_t n = adj.size();
  const double h = to_double(resolution);
  std::vector<double> dist(n * n);
  std::vector<std::size_t> hops(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(hops.begin(), hops.end(), std::numeric_limits<std::size_t>::max());
    std::queue<std::uint32_t> q;
    hops[s] = 0;
    q.push(static_cast<std::uint32_t>(s));
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto u : adj[v])
        if (hops[u] == std::numeric_limits<std::size_t>::max()) {
          hops[u] = hops[v] + 1;
          q.push(u);
        }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (hops[t] == std::numeric_limits<std::size_t>::max()) throw MalformedInput("metric_graph_space: graph is disconnected");
      dist[s * n + t] = static_cast<double>(hops[t]) * h;
    }
  }
  return FiniteMMSpace::from_matrix(std::move(dist), std::vector<Rational>(n, resolution), h);
}

}  // namespace bstopo::mm
