#include <numeric>
#include <string>

#include "bstopo/core/error.hpp"
#include "bstopo/lab/graphs.hpp"

namespace bstopo::lab {

using simplicial::SimplexList;
using simplicial::SimplicialComplex;
using simplicial::Vertex;

Multigraph voltage_cover(const VoltageGraph& vg) {
  const std::size_t n = vg.degree;
  if (n == 0) throw MalformedInput("voltage graph degree must be positive");
  Multigraph out;
  out.vertex_count = vg.base_vertices * n;
  for (std::size_t e = 0; e < vg.edges.size(); ++e) {
    const auto& edge = vg.edges[e];
    if (edge.tail >= vg.base_vertices || edge.head >= vg.base_vertices) {
      throw MalformedInput("voltage edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (edge.perm.size() != n) {
      throw MalformedInput("voltage edge " + std::to_string(e) + " permutation has size " +
                           std::to_string(edge.perm.size()) + ", expected " + std::to_string(n));
    }
    std::vector<char> hit(n, 0);
    for (auto x : edge.perm) {
      if (x >= n || hit[x]) throw MalformedInput("voltage edge " + std::to_string(e) + " label is not a permutation");
      hit[x] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) out.edges.emplace_back(edge.tail * n + i, edge.head * n + edge.perm[i]);
  }
  return out;
}

VoltageGraph cyclic_wedge(std::size_t r, std::size_t n) {
  if (n == 0) throw ContractError("cyclic_wedge: degree must be positive");
  VoltageGraph vg;
  vg.base_vertices = 1;
  vg.degree = n;
  for (std::size_t j = 0; j < r; ++j) {
    VoltageEdge e;
    e.perm.resize(n);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    if (j == 0)
      for (std::size_t i = 0; i < n; ++i) e.perm[i] = static_cast<std::uint32_t>((i + 1) % n);
    vg.edges.push_back(std::move(e));
  }
  return vg;
}

SimplicialComplex realize(const Multigraph& g) {
  SimplexList gens;
  auto next = static_cast<Vertex>(g.vertex_count);
  for (const auto& [a, b] : g.edges) {
    const Vertex x = next++;
    const Vertex y = next++;
    gens.push_back({static_cast<Vertex>(a), x});
    gens.push_back({x, y});
    gens.push_back({y, static_cast<Vertex>(b)});
  }
  return SimplicialComplex::from_maximal(gens, 1, next);
}

std::size_t connected_components(const Multigraph& g) {
  std::vector<std::size_t> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = g.vertex_count;
  for (const auto& [a, b] : g.edges) {
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps;
}

std::int64_t cycle_rank(const Multigraph& g) {
  return static_cast<std::int64_t>(g.edges.size()) - static_cast<std::int64_t>(g.vertex_count) +
         static_cast<std::int64_t>(connected_components(g));
}

Multigraph square_torus_graph(std::size_t n) {
  if (n < 3) throw ContractError("square_torus_graph: n must be at least 3");
  Multigraph g;
  g.vertex_count = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.edges.emplace_back(i * n + j, ((i + 1) % n) * n + j);
      g.edges.emplace_back(i * n + j, i * n + (j + 1) % n);
    }
  return g;
}

Multigraph cycle_graph(std::size_t n) {
  Multigraph g;
  g.vertex_count = n;
  for (std::size_t i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

SimplicialComplex cycle_complex(std::size_t n) {
  if (n < 3) throw ContractError("cycle_complex: n must be at least 3");
  SimplexList gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return SimplicialComplex::from_maximal(gens, 1);
}

SimplicialComplex path_complex(std::size_t n) {
  SimplexList gens;
  if (n == 1) gens.push_back({0});
  for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return SimplicialComplex::from_maximal(gens, 1, n);
}

SimplicialComplex triangulated_torus(std::size_t n) {
  if (n < 3) throw ContractError("triangulated_torus: n must be at least 3");
  auto at = [n](std::size_t i, std::size_t j) { return static_cast<Vertex>((i % n) * n + (j % n)); };
  SimplexList gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gens.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      gens.push_back({at(i, j), at(i, j + 1), at(i + 1, j + 1)});
    }
  return SimplicialComplex::from_maximal(gens, 2);
}

SimplicialComplex seven_vertex_torus() {
  SimplexList gens;
  for (Vertex i = 0; i < 7; ++i) {
    gens.push_back({i, (i + 1) % 7, (i + 3) % 7});
    gens.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_maximal(gens, 2);
}

SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::from_maximal({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 2);
}

SimplicialComplex wedge_of_circles(std::size_t r) {
  SimplexList gens;
  for (std::size_t j = 0; j < r; ++j) {
    const auto a = static_cast<Vertex>(1 + 2 * j);
    const auto b = static_cast<Vertex>(2 + 2 * j);
    gens.push_back({0, a});
    gens.push_back({a, b});
    gens.push_back({0, b});
  }
  return SimplicialComplex::from_maximal(gens, 1, 1);
}

}  // namespace bstopo::lab
