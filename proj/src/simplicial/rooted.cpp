#include "bstopo/simplicial/rooted.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "bstopo/core/error.hpp"

namespace bstopo::simplicial {
namespace {

struct Incidence {
  // For vertex v, the (dimension, index) pairs of simplices of dimension >= 1
  // containing v.
  std::vector<std::vector<std::pair<int, std::size_t>>> of;

  explicit Incidence(const SimplicialComplex& c) : of(c.vertex_count()) {
    for (int k = 1; k <= c.top_dim(); ++k) {
      for (std::size_t i = 0; i < c.count(k); ++i) {
        for (Vertex v : c.simplex(k, i)) of[v].emplace_back(k, i);
      }
    }
  }
};

void append_u32(std::string& out, std::uint32_t x) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
}

class Canonizer {
 public:
  Canonizer(const SimplicialComplex& c, Vertex root) : c_(c), inc_(c), n_(c.vertex_count()) {
    colors_.assign(n_, 1);
    colors_[root] = 0;
  }

  std::string run() {
    search(colors_);
    return best_ ? *best_ : std::string{};
  }

 private:
  // Replaces colours by ranks of (colour, multiset of incident simplex
  // colour patterns) until no cell splits.
  void refine(std::vector<std::uint32_t>& colors) const {
    std::size_t cells = count_cells(colors);
    while (true) {
      std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> keys(n_);
      std::vector<std::uint32_t> pattern;
      std::vector<std::vector<std::uint32_t>> patterns;
      for (std::size_t v = 0; v < n_; ++v) {
        patterns.clear();
        for (auto [k, i] : inc_.of[v]) {
          pattern.clear();
          pattern.push_back(static_cast<std::uint32_t>(k));
          for (Vertex u : c_.simplex(k, i))
            if (u != v) pattern.push_back(colors[u]);
          std::sort(pattern.begin() + 1, pattern.end());
          patterns.push_back(pattern);
        }
        std::sort(patterns.begin(), patterns.end());
        auto& key = keys[v];
        key.first = colors[v];
        for (const auto& p : patterns) {
          key.second.push_back(static_cast<std::uint32_t>(p.size()));
          key.second.insert(key.second.end(), p.begin(), p.end());
        }
      }
      std::vector<std::size_t> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
      std::uint32_t rank = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && keys[order[i]] != keys[order[i - 1]]) rank = static_cast<std::uint32_t>(i);
        colors[order[i]] = rank;
      }
      const std::size_t now = count_cells(colors);
      if (now == cells) return;
      cells = now;
    }
  }

  static std::size_t count_cells(const std::vector<std::uint32_t>& colors) {
    std::vector<std::uint32_t> sorted(colors);
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  // Colours are ranks, so a cell with colour c occupies positions c.. of the
  // sorted order; a discrete colouring is a bijection onto 0..n-1.
  std::string serialize(const std::vector<std::uint32_t>& label) const {
    std::string out;
    append_u32(out, static_cast<std::uint32_t>(n_));
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> s;
    for (int k = 1; k <= c_.top_dim(); ++k) {
      const std::size_t w = static_cast<std::size_t>(k) + 1;
      rows.clear();
      for (std::size_t i = 0; i < c_.count(k); ++i) {
        s.clear();
        for (Vertex v : c_.simplex(k, i)) s.push_back(label[v]);
        std::sort(s.begin(), s.end());
        rows.insert(rows.end(), s.begin(), s.end());
      }
      std::vector<std::size_t> order(c_.count(k));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(rows.begin() + static_cast<std::ptrdiff_t>(a * w),
                                            rows.begin() + static_cast<std::ptrdiff_t>((a + 1) * w),
                                            rows.begin() + static_cast<std::ptrdiff_t>(b * w),
                                            rows.begin() + static_cast<std::ptrdiff_t>((b + 1) * w));
      });
      append_u32(out, static_cast<std::uint32_t>(k));
      append_u32(out, static_cast<std::uint32_t>(order.size()));
      for (auto idx : order)
        for (std::size_t j = 0; j < w; ++j) {
          // big-endian so that byte order matches numeric order
          const auto x = rows[idx * w + j];
          for (int b = 3; b >= 0; --b) out.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
        }
    }
    return out;
  }

  // True when swapping u and v maps the complex onto itself.
  bool transposition_is_automorphism(Vertex u, Vertex v) const {
    std::vector<Vertex> img;
    for (Vertex x : {u, v}) {
      for (auto [k, i] : inc_.of[x]) {
        img.clear();
        for (Vertex y : c_.simplex(k, i)) img.push_back(y == u ? v : (y == v ? u : y));
        std::sort(img.begin(), img.end());
        if (!c_.contains(img)) return false;
      }
    }
    return true;
  }

  void search(std::vector<std::uint32_t> colors) {
    refine(colors);
    // First non-singleton cell = smallest colour shared by two vertices.
    std::vector<std::size_t> size(n_, 0);
    for (auto col : colors) ++size[col];
    std::optional<std::uint32_t> target;
    for (std::uint32_t col = 0; col < n_; ++col) {
      if (size[col] > 1) {
        target = col;
        break;
      }
    }
    if (!target) {
      auto code = serialize(colors);
      if (!best_ || code < *best_) best_ = std::move(code);
      return;
    }
    std::vector<Vertex> cell;
    for (std::size_t v = 0; v < n_; ++v)
      if (colors[v] == *target) cell.push_back(static_cast<Vertex>(v));
    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      bool twin = false;
      for (Vertex u : explored) {
        if (transposition_is_automorphism(u, v)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      explored.push_back(v);
      // Individualize v: it keeps colour `target`, the rest of its cell
      // moves just after it.
      auto next = colors;
      for (std::size_t x = 0; x < n_; ++x) {
        next[x] = colors[x] * 2 + ((colors[x] == *target && x != v) ? 1 : 0);
      }
      search(std::move(next));
    }
  }

  const SimplicialComplex& c_;
  Incidence inc_;
  std::size_t n_;
  std::vector<std::uint32_t> colors_;
  std::optional<std::string> best_;
};

// Backtracking isomorphism search with vertices of `a` taken in BFS order
// from the root.
class IsoSearch {
 public:
  IsoSearch(const RootedComplex& a, const RootedComplex& b) : a_(a.complex), b_(b.complex), inc_a_(a_), inc_b_(b_) {
    const std::size_t n = a_.vertex_count();
    std::vector<bool> seen(n, false);
    auto bfs = [&](Vertex s) {
      std::size_t head = order_.size();
      order_.push_back(s);
      seen[s] = true;
      while (head < order_.size()) {
        const Vertex v = order_[head++];
        for (Vertex u : a_.neighbors(v))
          if (!seen[u]) {
            seen[u] = true;
            order_.push_back(u);
          }
      }
    };
    bfs(a.root);
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v]) bfs(static_cast<Vertex>(v));
    position_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) position_[order_[i]] = i;
    // closes_[v] = simplices of a whose last vertex in search order is v.
    closes_.resize(n);
    for (int k = 1; k <= a_.top_dim(); ++k) {
      for (std::size_t i = 0; i < a_.count(k); ++i) {
        Vertex last = 0;
        std::size_t best = 0;
        for (Vertex v : a_.simplex(k, i)) {
          if (position_[v] >= best) {
            best = position_[v];
            last = v;
          }
        }
        closes_[last].emplace_back(k, i);
      }
    }
    sig_a_ = signatures(a_, inc_a_);
    sig_b_ = signatures(b_, inc_b_);
    map_.assign(n, kNone);
    used_.assign(b_.vertex_count(), false);
    root_b_ = b.root;
  }

  bool run(Vertex root_a) {
    if (sig_a_[root_a] != sig_b_[root_b_]) return false;
    return extend(0);
  }

 private:
  static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

  static std::vector<std::vector<std::size_t>> signatures(const SimplicialComplex& c, const Incidence& inc) {
    std::vector<std::vector<std::size_t>> sig(c.vertex_count());
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
      sig[v].assign(static_cast<std::size_t>(std::max(c.top_dim(), 0)) + 1, 0);
      for (auto [k, i] : inc.of[v]) ++sig[v][static_cast<std::size_t>(k)];
    }
    return sig;
  }

  bool consistent(Vertex v, Vertex w) const {
    if (used_[w] || sig_a_[v] != sig_b_[w]) return false;
    // Mapped neighbours of v must map to neighbours of w, and w may have no
    // other mapped neighbours.
    std::size_t mapped_nb = 0;
    for (Vertex u : a_.neighbors(v)) {
      if (map_[u] == kNone) continue;
      ++mapped_nb;
      const auto nb = b_.neighbors(w);
      if (!std::binary_search(nb.begin(), nb.end(), map_[u])) return false;
    }
    std::size_t used_nb = 0;
    for (Vertex x : b_.neighbors(w)) used_nb += used_[x] ? 1 : 0;
    return used_nb == mapped_nb;
  }

  bool closes_ok(Vertex v) const {
    std::vector<Vertex> img;
    for (auto [k, i] : closes_[v]) {
      img.clear();
      for (Vertex u : a_.simplex(k, i)) img.push_back(map_[u]);
      std::sort(img.begin(), img.end());
      if (!b_.contains(img)) return false;
    }
    return true;
  }

  bool try_map(std::size_t depth, Vertex v, Vertex w) {
    if (!consistent(v, w)) return false;
    map_[v] = w;
    used_[w] = true;
    if (closes_ok(v) && extend(depth + 1)) return true;
    map_[v] = kNone;
    used_[w] = false;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    if (depth == 0) return try_map(depth, v, root_b_);
    // Restrict to neighbours of an already-mapped neighbour's image.
    for (Vertex u : a_.neighbors(v)) {
      if (map_[u] != kNone) {
        for (Vertex w : b_.neighbors(map_[u]))
          if (try_map(depth, v, w)) return true;
        return false;
      }
    }
    for (std::size_t w = 0; w < b_.vertex_count(); ++w)
      if (try_map(depth, v, static_cast<Vertex>(w))) return true;
    return false;
  }

  const SimplicialComplex& a_;
  const SimplicialComplex& b_;
  Incidence inc_a_;
  Incidence inc_b_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<std::pair<int, std::size_t>>> closes_;
  std::vector<std::vector<std::size_t>> sig_a_;
  std::vector<std::vector<std::size_t>> sig_b_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  Vertex root_b_ = 0;
};

}  // namespace

RootedComplex make_rooted(SimplicialComplex complex, Vertex root) {
  if (root >= complex.vertex_count()) throw ContractError("root " + std::to_string(root) + " is not a vertex");
  return RootedComplex{std::move(complex), root};
}

RootedComplex closed_ball(const RootedComplex& rooted, std::size_t r) {
  const auto dist = bfs_distances(rooted.complex, rooted.root);
  std::vector<Vertex> keep;
  Vertex new_root = 0;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] <= r) {
      if (v == rooted.root) new_root = static_cast<Vertex>(keep.size());
      keep.push_back(static_cast<Vertex>(v));
    }
  }
  return RootedComplex{rooted.complex.induced(keep), new_root};
}

bool root_isomorphic(const RootedComplex& a, const RootedComplex& b) {
  const auto& ca = a.complex;
  const auto& cb = b.complex;
  if (ca.vertex_count() != cb.vertex_count() || ca.top_dim() != cb.top_dim()) return false;
  for (int k = 0; k <= ca.top_dim(); ++k)
    if (ca.count(k) != cb.count(k)) return false;
  if (ca.vertex_count() == 0) return true;
  if (ca.degree(a.root) != cb.degree(b.root)) return false;
  IsoSearch search(a, b);
  return search.run(a.root);
}

std::string canonical_code(const RootedComplex& rooted) {
  if (rooted.complex.vertex_count() == 0) return {};
  Canonizer c(rooted.complex, rooted.root);
  return c.run();
}

}  // namespace bstopo::simplicial
