#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bstopo/simplicial/complex.hpp"

namespace bstopo::lab {

// Finite multigraph; loops and parallel edges are allowed.
struct Multigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct VoltageEdge {
  std::size_t tail = 0;
  std::size_t head = 0;
  // perm[i] = image of sheet i, a permutation of {0, ..., n-1}.
  std::vector<std::uint32_t> perm;
};

struct VoltageGraph {
  std::size_t base_vertices = 0;
  std::size_t degree = 1;
  std::vector<VoltageEdge> edges;
};

// Cover with vertex (u, i) at index u * degree + i and one edge
// ((u, i), (v, perm_e(i))) per base edge e = (u, v) and sheet i.
// Throws MalformedInput on a permutation of the wrong size or a non-bijection.
Multigraph voltage_cover(const VoltageGraph& vg);

// One vertex with r loops; loop 0 carries the n-cycle i -> i+1, the others
// the identity.
VoltageGraph cyclic_wedge(std::size_t r, std::size_t n);

// Simplicial realization: every edge is subdivided into three segments, so
// loops and parallel edges become honest cycles. Homotopy type is preserved.
simplicial::SimplicialComplex realize(const Multigraph& g);

std::size_t connected_components(const Multigraph& g);
// E - V + components.
std::int64_t cycle_rank(const Multigraph& g);

// Length of the shortest cycle (a loop counts 1, a parallel pair 2);
// std::nullopt for a forest.
std::optional<std::size_t> essential_girth(const Multigraph& g);
std::optional<std::size_t> essential_girth(const simplicial::SimplicialComplex& complex);

// n x n square grid on the torus (4-regular).
Multigraph square_torus_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);

// Standard fixtures.
simplicial::SimplicialComplex cycle_complex(std::size_t n);
simplicial::SimplicialComplex path_complex(std::size_t n);
// n x n grid on the torus with each square split along its diagonal;
// n^2 vertices, 3n^2 edges, 2n^2 triangles. Requires n >= 3.
simplicial::SimplicialComplex triangulated_torus(std::size_t n);
// The 7-vertex triangulation of the torus.
simplicial::SimplicialComplex seven_vertex_torus();
simplicial::SimplicialComplex tetrahedron_boundary();
// r triangles sharing vertex 0.
simplicial::SimplicialComplex wedge_of_circles(std::size_t r);

}  // namespace bstopo::lab
