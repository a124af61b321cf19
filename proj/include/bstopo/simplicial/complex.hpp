#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bstopo::simplicial {

using Vertex = std::uint32_t;
using SimplexList = std::vector<std::vector<Vertex>>;

inline constexpr int kDefaultMaxDim = 3;

// A finite simplicial complex stored as the downward closure of its
// generating simplices, truncated at max_dim. Every id in [0, vertex_count)
// is a vertex. Simplices of each dimension live in one flat, lexicographically
// sorted array, so a simplex is identified by (dimension, index).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Throws MalformedInput if a simplex repeats a vertex.
  static SimplicialComplex from_maximal(const SimplexList& simplices, int max_dim = kDefaultMaxDim,
                                        std::size_t min_vertex_count = 0);

  std::size_t vertex_count() const { return vertex_count_; }
  int max_dim() const { return max_dim_; }
  // True when some generating simplex had dimension above max_dim.
  bool truncated() const { return truncated_; }
  // Highest dimension with a stored simplex, -1 for the empty complex.
  int top_dim() const;

  std::size_t count(int k) const;
  std::span<const Vertex> simplex(int k, std::size_t index) const;
  std::optional<std::size_t> find(std::span<const Vertex> sorted_vertices) const;
  bool contains(std::span<const Vertex> sorted_vertices) const { return find(sorted_vertices).has_value(); }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;

  std::vector<std::vector<Vertex>> maximal_simplices() const;
  std::vector<std::size_t> face_counts() const;

  // Full subcomplex on `vertices`, renumbered to 0..|vertices|-1 in
  // increasing original id.
  SimplicialComplex induced(std::span<const Vertex> vertices) const;
  // Vertex v becomes perm[v].
  SimplicialComplex relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.max_dim_ == b.max_dim_ && a.flat_ == b.flat_;
  }

 private:
  void build_index();

  std::size_t vertex_count_ = 0;
  int max_dim_ = 0;
  bool truncated_ = false;
  // flat_[k] holds count(k) * (k + 1) vertex ids.
  std::vector<std::vector<Vertex>> flat_;
  // Packed lookup keys per dimension when the ids fit in 64 bits; empty otherwise.
  std::vector<std::vector<std::uint64_t>> keys_;
  int key_bits_ = 0;
  std::vector<std::size_t> adj_offsets_;
  std::vector<Vertex> adj_;
};

// Connected components of the 1-skeleton (union-find); one label per vertex.
std::vector<std::size_t> component_labels(const SimplicialComplex& complex);
std::size_t component_count(const SimplicialComplex& complex);

// Graph distances from `source` in the 1-skeleton, SIZE_MAX if unreachable.
std::vector<std::size_t> bfs_distances(const SimplicialComplex& complex, Vertex source);

}  // namespace bstopo::simplicial
