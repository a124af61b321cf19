#pragma once

#include <cstddef>
#include <vector>

#include "bstopo/core/rational.hpp"
#include "bstopo/mmspace/space.hpp"

namespace bstopo::mm {

// k = L/h equally spaced points on a circle of circumference L, arc-length
// metric, weight h each. Throws ContractError unless k is an integer >= 3.
FiniteMMSpace circle_space(const Rational& circumference, const Rational& resolution);

// k*k grid on the flat torus R^2/(L Z)^2, weight h^2 each. Point (x, y) has
// index torus_index(k, x, y).
FiniteMMSpace torus_space(const Rational& side, const Rational& resolution);
inline std::size_t torus_index(std::size_t k, std::size_t x, std::size_t y) { return x * k + y; }

struct GraphEdge {
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational length{1};
};

// Every edge subdivided into steps of length h; points are the graph vertices
// (indices 0..vertex_count-1) followed by the interior points of each edge
// in edge order, tail to head. Shortest-path metric, weight h per point.
// Throws MalformedInput on a disconnected graph or an edge length that is
// not a positive multiple of h.
FiniteMMSpace metric_graph_space(std::size_t vertex_count, const std::vector<GraphEdge>& edges,
                                 const Rational& resolution);

}  // namespace bstopo::mm
