#include <algorithm>
#include <limits>
#include <queue>

#include "bstopo/lab/graphs.hpp"

namespace bstopo::lab {
namespace {

// Shortest cycle in a simple graph given as adjacency lists: BFS from every
// vertex, closing a cycle at each non-tree edge.
std::optional<std::size_t> simple_girth(const std::vector<std::vector<std::size_t>>& adj) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;
  const std::size_t n = adj.size();
  std::vector<std::size_t> dist(n);
  std::vector<std::size_t> parent(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[s] = 0;
    parent[s] = kInf;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (auto u : adj[v]) {
        if (dist[u] == kInf) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (parent[v] != u) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

}  // namespace

std::optional<std::size_t> essential_girth(const Multigraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count);
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : g.edges) {
    if (a == b) return 1;
    seen.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i] == seen[i - 1]) return 2;
  for (const auto& [a, b] : seen) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return simple_girth(adj);
}

std::optional<std::size_t> essential_girth(const simplicial::SimplicialComplex& complex) {
  std::vector<std::vector<std::size_t>> adj(complex.vertex_count());
  for (std::size_t v = 0; v < complex.vertex_count(); ++v)
    for (auto u : complex.neighbors(static_cast<simplicial::Vertex>(v))) adj[v].push_back(u);
  return simple_girth(adj);
}

}  // namespace bstopo::lab
