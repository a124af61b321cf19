#include "bstopo/mmspace/relations.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "bstopo/core/error.hpp"

namespace bstopo::mm {
namespace {

// Dinic on a small dense-ish graph with integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t n) : adj_(n), level_(n), it_(n) {}

  void add_edge(std::size_t u, std::size_t v, std::int64_t cap) {
    adj_[u].push_back(edges_.size());
    edges_.push_back({v, cap});
    adj_[v].push_back(edges_.size());
    edges_.push_back({u, 0});
  }

  std::int64_t run(std::size_t s, std::size_t t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (const std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
    }
    return flow;
  }

 private:
  struct Edge {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto e : adj_[u]) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t limit) {
    if (u == t) return limit;
    for (auto& i = it_[u]; i < adj_[u].size(); ++i) {
      const auto e = adj_[u][i];
      const auto v = edges_[e].to;
      if (edges_[e].cap <= 0 || level_[v] != level_[u] + 1) continue;
      const auto f = dfs(v, t, std::min(limit, edges_[e].cap));
      if (f > 0) {
        edges_[e].cap -= f;
        edges_[e ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

void check_measure(const FiniteMMSpace& ambient, const std::vector<Rational>& mu, const char* name) {
  if (mu.size() != ambient.size()) throw ContractError(std::string(name) + " does not match the ambient size");
  for (const auto& m : mu)
    if (m < 0) throw ContractError(std::string(name) + " has a negative mass");
}

}  // namespace

Rational worst_deficiency(const FiniteMMSpace& ambient, const std::vector<Rational>& mu1,
                          const std::vector<Rational>& mu2, std::size_t p, double eps, double R) {
  const std::size_t n = ambient.size();
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    scale = std::lcm(scale, mu1[i].denominator());
    scale = std::lcm(scale, mu2[i].denominator());
  }
  auto scaled = [&](const Rational& x) { return x.numerator() * (scale / x.denominator()); };

  const auto ball_row = ambient.distance_row(p);
  std::vector<std::size_t> sources;
  std::int64_t supply = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mu1[i] > 0 && within_closed(ball_row[i], R)) {
      sources.push_back(i);
      supply += scaled(mu1[i]);
    }
  }
  if (sources.empty()) return Rational(0);
  // Nodes: source, sink, the selected mu1 atoms, every mu2 atom.
  const std::size_t s = 0;
  const std::size_t t = 1;
  MaxFlow flow(2 + sources.size() + n);
  const std::int64_t infinite = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<double> row(n);
  for (std::size_t a = 0; a < sources.size(); ++a) {
    flow.add_edge(s, 2 + a, scaled(mu1[sources[a]]));
    ambient.distance_row(sources[a], row);
    for (std::size_t b = 0; b < n; ++b)
      if (mu2[b] > 0 && row[b] < eps) flow.add_edge(2 + a, 2 + sources.size() + b, infinite);
  }
  for (std::size_t b = 0; b < n; ++b)
    if (mu2[b] > 0) flow.add_edge(2 + sources.size() + b, t, scaled(mu2[b]));
  return Rational(supply - flow.run(s, t), scale);
}

bool related_measures(const PointedMeasurePair& pair, const Rational& eps, const Rational& R) {
  if (pair.ambient == nullptr) throw ContractError("related_measures: no ambient space");
  const auto& Z = *pair.ambient;
  check_measure(Z, pair.mu1, "mu1");
  check_measure(Z, pair.mu2, "mu2");
  if (pair.p1 >= Z.size() || pair.p2 >= Z.size()) throw ContractError("related_measures: basepoint out of range");
  if (eps <= 0 || R <= 0) throw ContractError("related_measures: eps and R must be positive");
  const double e = to_double(eps);
  const double r = to_double(R);
  if (!(Z.dist(pair.p1, pair.p2) < e)) return false;
  if (!(worst_deficiency(Z, pair.mu1, pair.mu2, pair.p1, e, r) < eps)) return false;
  return worst_deficiency(Z, pair.mu2, pair.mu1, pair.p2, e, r) < eps;
}

bool related_subsets(const FiniteMMSpace& ambient, const PointSet& X1, const PointSet& X2, std::size_t p1,
                     std::size_t p2, double eps, double R) {
  const std::size_t n = ambient.size();
  if (X1.empty() || X2.empty()) throw ContractError("related_subsets: subsets must be nonempty");
  if (p1 >= n || p2 >= n) throw ContractError("related_subsets: basepoint out of range");
  for (const auto* X : {&X1, &X2})
    for (auto x : *X)
      if (x >= n) throw ContractError("related_subsets: point out of range");
  if (!(ambient.dist(p1, p2) < eps)) return false;
  std::vector<double> nearest(n);
  std::vector<double> row(n);
  auto inclusion = [&](const PointSet& A, const PointSet& B, std::size_t p) {
    std::fill(nearest.begin(), nearest.end(), std::numeric_limits<double>::infinity());
    for (auto b : B) {
      ambient.distance_row(b, row);
      kernels::min_inplace(nearest, row);
    }
    ambient.distance_row(p, row);
    for (auto a : A)
      if (within_closed(row[a], R) && !(nearest[a] < eps)) return false;
    return true;
  };
  return inclusion(X1, X2, p1) && inclusion(X2, X1, p2);
}

}  // namespace bstopo::mm
