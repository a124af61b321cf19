#pragma once

// Slow, independent reference computations used to check the library.
// Nothing here calls the code paths it is compared against.

#include <algorithm>
#include <bit>
#include <cmath>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "bstopo/core/rational.hpp"
#include "bstopo/mmspace/space.hpp"
#include "bstopo/simplicial/complex.hpp"

namespace oracle {

using bstopo::Rational;
using Big = boost::multiprecision::cpp_int;
using Simplex = std::vector<std::uint32_t>;

// All faces of the given simplices, grouped by dimension, up to max_dim.
inline std::vector<std::set<Simplex>> all_faces(const std::vector<Simplex>& generators, int max_dim) {
  std::vector<std::set<Simplex>> faces(static_cast<std::size_t>(max_dim) + 1);
  for (auto g : generators) {
    std::sort(g.begin(), g.end());
    const std::size_t m = g.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) s.push_back(g[i]);
      if (static_cast<int>(s.size()) - 1 <= max_dim) faces[s.size() - 1].insert(s);
    }
  }
  return faces;
}

struct SmithResult {
  std::size_t rank = 0;
  std::vector<Big> invariant_factors;  // nonzero diagonal entries, each dividing the next
};

// Integer Smith normal form by repeated row and column operations.
inline SmithResult smith_normal_form(std::vector<std::vector<Big>> a) {
  SmithResult out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Big q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Big q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // The pivot must divide the rest of the block.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
              clean = false;
            }
      }
    }
    out.invariant_factors.push_back(abs(a[t][t]));
    ++t;
  }
  out.rank = out.invariant_factors.size();
  return out;
}

// Boundary matrix from k-simplices (columns) to (k-1)-simplices (rows).
inline std::vector<std::vector<Big>> boundary_matrix(const std::set<Simplex>& lower, const std::set<Simplex>& upper) {
  std::map<Simplex, std::size_t> row_of;
  for (const auto& s : lower) row_of.emplace(s, row_of.size());
  std::vector<std::vector<Big>> m(lower.size(), std::vector<Big>(upper.size(), 0));
  std::size_t c = 0;
  for (const auto& s : upper) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      m[row_of.at(f)][c] = (i % 2 == 0) ? 1 : -1;
    }
    ++c;
  }
  return m;
}

// Betti numbers b_0..b_up_to of the complex generated by `generators`
// (untruncated up to up_to + 1).
// vertex_count adds isolated vertices 0..vertex_count-1 not named by any generator.
inline std::vector<std::size_t> snf_betti(const std::vector<Simplex>& generators, int up_to,
                                          std::size_t vertex_count = 0) {
  auto faces = all_faces(generators, up_to + 1);
  for (std::size_t v = 0; v < vertex_count; ++v) faces[0].insert(Simplex{static_cast<std::uint32_t>(v)});
  std::vector<std::size_t> rank(static_cast<std::size_t>(up_to) + 2, 0);  // rank[k] = rank of ∂_k
  for (int k = 1; k <= up_to + 1; ++k) {
    const auto& lo = faces[static_cast<std::size_t>(k - 1)];
    const auto& hi = faces[static_cast<std::size_t>(k)];
    if (lo.empty() || hi.empty()) continue;
    rank[static_cast<std::size_t>(k)] = smith_normal_form(boundary_matrix(lo, hi)).rank;
  }
  std::vector<std::size_t> betti;
  for (int k = 0; k <= up_to; ++k)
    betti.push_back(faces[static_cast<std::size_t>(k)].size() - rank[static_cast<std::size_t>(k)] -
                    rank[static_cast<std::size_t>(k + 1)]);
  return betti;
}

// Number of connected components by union-find over the edge list.
inline std::size_t union_find_components(std::size_t n, const std::vector<Simplex>& generators) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& g : generators)
    for (std::size_t i = 1; i < g.size(); ++i) parent[find(g[i])] = find(g[0]);
  std::size_t c = 0;
  for (std::size_t x = 0; x < n; ++x) c += find(x) == x;
  return c;
}

// Root-preserving simplicial isomorphism by trying every permutation.
inline bool brute_root_isomorphic(const std::vector<Simplex>& a, std::size_t na, std::uint32_t ra,
                                  const std::vector<Simplex>& b, std::size_t nb, std::uint32_t rb) {
  if (na != nb) return false;
  const auto fa = all_faces(a, 8);
  std::set<Simplex> sa, sb;
  for (const auto& d : fa) sa.insert(d.begin(), d.end());
  for (const auto& d : all_faces(b, 8)) sb.insert(d.begin(), d.end());
  if (sa.size() != sb.size()) return false;
  std::vector<std::uint32_t> perm(na);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[ra] != rb) continue;
    bool ok = true;
    for (const auto& s : sa) {
      Simplex t;
      for (auto v : s) t.push_back(perm[v]);
      std::sort(t.begin(), t.end());
      if (!sb.count(t)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool closed_le(double d, double r) { return d <= r + 1e-9 * std::max(1.0, r); }

// Radius-r Cheeger constant by enumerating every subset of a small space.
inline Rational brute_cheeger(const bstopo::mm::FiniteMMSpace& space, double r) {
  const std::size_t n = space.size();
  const double h = space.resolution();
  const Rational total = space.volume();
  bool found = false;
  Rational best(0);
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i & 1) != 0; };
    Rational vol(0);
    for (std::size_t i = 0; i < n; ++i)
      if (in(i)) vol += space.weight(i);
    if (vol * 2 > total) continue;
    // Connectivity under the step-h graph.
    std::vector<std::size_t> stack;
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n && stack.empty(); ++i)
      if (in(i)) {
        stack.push_back(i);
        seen[i] = 1;
      }
    std::size_t reached = 0;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      ++reached;
      for (std::size_t y = 0; y < n; ++y)
        if (in(y) && !seen[y] && closed_le(space.dist(x, y), h)) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (reached != static_cast<std::size_t>(std::popcount(mask))) continue;
    std::vector<std::size_t> boundary;
    for (std::size_t x = 0; x < n; ++x) {
      if (!in(x)) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (!in(y) && closed_le(space.dist(x, y), h)) {
          boundary.push_back(x);
          break;
        }
    }
    Rational collar(0);
    for (std::size_t z = 0; z < n; ++z)
      for (auto b : boundary)
        if (closed_le(space.dist(z, b), r)) {
          collar += space.weight(z);
          break;
        }
    const Rational ratio = collar / vol;
    if (!found || ratio < best) best = ratio;
    found = true;
  }
  return best;
}

// (eps, R)-relatedness by checking every subset F of the mu1-atoms in the
// closed ball around p1 (and symmetrically).
inline bool brute_related(const bstopo::mm::FiniteMMSpace& Z, const std::vector<Rational>& mu1,
                          const std::vector<Rational>& mu2, std::size_t p1, std::size_t p2, const Rational& eps,
                          const Rational& R) {
  const double e = bstopo::to_double(eps);
  const double r = bstopo::to_double(R);
  if (!(Z.dist(p1, p2) < e)) return false;
  auto one_side = [&](const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t p) {
    std::vector<std::size_t> atoms;
    for (std::size_t i = 0; i < Z.size(); ++i)
      if (a[i] > 0 && closed_le(Z.dist(p, i), r)) atoms.push_back(i);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
      Rational mass_f(0), mass_n(0);
      for (std::size_t k = 0; k < atoms.size(); ++k)
        if (mask >> k & 1) mass_f += a[atoms[k]];
      for (std::size_t y = 0; y < Z.size(); ++y) {
        bool near = false;
        for (std::size_t k = 0; k < atoms.size() && !near; ++k)
          if ((mask >> k & 1) && Z.dist(atoms[k], y) < e) near = true;
        if (near) mass_n += b[y];
      }
      if (!(mass_f < mass_n + eps)) return false;
    }
    return true;
  };
  return one_side(mu1, mu2, p1) && one_side(mu2, mu1, p2);
}

}  // namespace oracle
