#include "bstopo/simplicial/complex.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "bstopo/core/error.hpp"

namespace bstopo::simplicial {
namespace {

int bits_for(std::size_t vertex_count) {
  return std::max(1, static_cast<int>(std::bit_width(vertex_count > 0 ? vertex_count - 1 : 0)));
}

std::uint64_t pack(std::span<const Vertex> s, int bits) {
  std::uint64_t key = 0;
  for (Vertex v : s) key = (key << bits) | v;
  return key;
}

void radix_sort_unique(std::vector<std::uint64_t>& keys, int used_bits) {
  constexpr int kDigit = 11;
  constexpr std::size_t kBuckets = std::size_t{1} << kDigit;
  std::vector<std::uint64_t> scratch(keys.size());
  std::vector<std::size_t> counts(kBuckets);
  for (int shift = 0; shift < used_bits; shift += kDigit) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto k : keys) ++counts[(k >> shift) & (kBuckets - 1)];
    std::size_t total = 0;
    for (auto& c : counts) {
      const auto here = c;
      c = total;
      total += here;
    }
    for (auto k : keys) scratch[counts[(k >> shift) & (kBuckets - 1)]++] = k;
    keys.swap(scratch);
  }
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

// Sorts rows of width w in `flat` lexicographically and removes duplicates.
void sort_unique_rows(std::vector<Vertex>& flat, std::size_t w) {
  const std::size_t rows = flat.size() / w;
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * w); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(w), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(w));
  });
  std::vector<Vertex> out;
  out.reserve(flat.size());
  for (std::size_t idx = 0; idx < rows; ++idx) {
    const auto r = row(order[idx]);
    if (!out.empty() && std::equal(r, r + static_cast<std::ptrdiff_t>(w), out.end() - static_cast<std::ptrdiff_t>(w)))
      continue;
    out.insert(out.end(), r, r + static_cast<std::ptrdiff_t>(w));
  }
  flat.swap(out);
}

// Appends every (k+1)-subset of `s` to `out`.
void append_subsets(std::span<const Vertex> s, std::size_t size, std::vector<Vertex>& out) {
  const std::size_t n = s.size();
  if (size > n) return;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    for (auto i : idx) out.push_back(s[i]);
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Packed keys of every size-subset of `s`.
void append_subset_keys(std::span<const Vertex> s, std::size_t size, int bits, std::vector<std::uint64_t>& out) {
  const std::size_t n = s.size();
  if (size > n) return;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t key = 0;
    for (auto i : idx) key = (key << bits) | s[i];
    out.push_back(key);
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(const SimplexList& simplices, int max_dim,
                                                  std::size_t min_vertex_count) {
  if (max_dim < 0) throw ContractError("max_dim must be non-negative");
  SimplicialComplex out;
  out.max_dim_ = max_dim;
  out.vertex_count_ = min_vertex_count;

  std::vector<std::vector<Vertex>> sorted;
  sorted.reserve(simplices.size());
  for (const auto& s : simplices) {
    if (s.empty()) continue;
    auto copy = s;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) {
      throw MalformedInput("simplex repeats vertex " + std::to_string(*std::adjacent_find(copy.begin(), copy.end())));
    }
    out.vertex_count_ = std::max<std::size_t>(out.vertex_count_, std::size_t{copy.back()} + 1);
    if (static_cast<int>(copy.size()) - 1 > max_dim) out.truncated_ = true;
    sorted.push_back(std::move(copy));
  }

  out.key_bits_ = bits_for(out.vertex_count_);
  out.flat_.assign(static_cast<std::size_t>(max_dim) + 1, {});
  out.flat_[0].resize(out.vertex_count_);
  std::iota(out.flat_[0].begin(), out.flat_[0].end(), Vertex{0});

  for (int k = 1; k <= max_dim; ++k) {
    const std::size_t w = static_cast<std::size_t>(k) + 1;
    auto& flat = out.flat_[static_cast<std::size_t>(k)];
    if (out.key_bits_ * static_cast<int>(w) <= 64) {
      std::vector<std::uint64_t> keys;
      for (const auto& s : sorted) append_subset_keys(s, w, out.key_bits_, keys);
      if (keys.empty()) continue;
      radix_sort_unique(keys, out.key_bits_ * static_cast<int>(w));
      flat.resize(keys.size() * w);
      const std::uint64_t mask = (std::uint64_t{1} << out.key_bits_) - 1;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        std::uint64_t key = keys[i];
        for (std::size_t j = w; j-- > 0;) {
          flat[i * w + j] = static_cast<Vertex>(key & mask);
          key >>= out.key_bits_;
        }
      }
    } else {
      for (const auto& s : sorted) append_subsets(s, w, flat);
      sort_unique_rows(flat, w);
    }
  }
  out.build_index();
  return out;
}

void SimplicialComplex::build_index() {
  key_bits_ = bits_for(vertex_count_);
  keys_.assign(flat_.size(), {});
  for (std::size_t k = 0; k < flat_.size(); ++k) {
    const std::size_t w = k + 1;
    if (key_bits_ * static_cast<int>(w) > 64) continue;
    auto& keys = keys_[k];
    keys.resize(flat_[k].size() / w);
    for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = pack({flat_[k].data() + i * w, w}, key_bits_);
  }

  adj_offsets_.assign(vertex_count_ + 1, 0);
  adj_.clear();
  if (flat_.size() > 1) {
    const auto& edges = flat_[1];
    for (std::size_t i = 0; i < edges.size(); i += 2) {
      ++adj_offsets_[edges[i] + 1];
      ++adj_offsets_[edges[i + 1] + 1];
    }
    std::partial_sum(adj_offsets_.begin(), adj_offsets_.end(), adj_offsets_.begin());
    adj_.resize(edges.size());
    std::vector<std::size_t> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); i += 2) {
      adj_[fill[edges[i]]++] = edges[i + 1];
      adj_[fill[edges[i + 1]]++] = edges[i];
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[v]),
                adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[v + 1]));
    }
  }
}

int SimplicialComplex::top_dim() const {
  for (int k = static_cast<int>(flat_.size()) - 1; k >= 0; --k) {
    if (!flat_[static_cast<std::size_t>(k)].empty()) return k;
  }
  return -1;
}

std::size_t SimplicialComplex::count(int k) const {
  if (k < 0 || k >= static_cast<int>(flat_.size())) return 0;
  return flat_[static_cast<std::size_t>(k)].size() / (static_cast<std::size_t>(k) + 1);
}

std::span<const Vertex> SimplicialComplex::simplex(int k, std::size_t index) const {
  const std::size_t w = static_cast<std::size_t>(k) + 1;
  return {flat_[static_cast<std::size_t>(k)].data() + index * w, w};
}

std::optional<std::size_t> SimplicialComplex::find(std::span<const Vertex> s) const {
  if (s.empty()) return std::nullopt;
  const std::size_t k = s.size() - 1;
  if (k >= flat_.size()) return std::nullopt;
  for (Vertex v : s)
    if (v >= vertex_count_) return std::nullopt;
  if (!keys_[k].empty() || flat_[k].empty()) {
    const auto& keys = keys_[k];
    const auto key = pack(s, key_bits_);
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - keys.begin());
  }
  std::size_t lo = 0;
  std::size_t hi = count(static_cast<int>(k));
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto row = simplex(static_cast<int>(k), mid);
    if (std::lexicographical_compare(row.begin(), row.end(), s.begin(), s.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count(static_cast<int>(k))) {
    const auto row = simplex(static_cast<int>(k), lo);
    if (std::equal(row.begin(), row.end(), s.begin(), s.end())) return lo;
  }
  return std::nullopt;
}

std::span<const Vertex> SimplicialComplex::neighbors(Vertex v) const {
  if (adj_offsets_.empty()) return {};
  return {adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
}

std::size_t SimplicialComplex::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= top_dim(); ++k) out.push_back(count(k));
  return out;
}

std::vector<std::vector<Vertex>> SimplicialComplex::maximal_simplices() const {
  // A k-simplex is maximal iff no (k+1)-simplex contains it; mark faces of
  // every (k+1)-simplex.
  std::vector<std::vector<Vertex>> out;
  const int top = top_dim();
  if (top < 0) return out;
  std::vector<std::vector<bool>> covered(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) covered[static_cast<std::size_t>(k)].assign(count(k), false);
  std::vector<Vertex> face;
  for (int k = 1; k <= top; ++k) {
    for (std::size_t i = 0; i < count(k); ++i) {
      const auto s = simplex(k, i);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) face.push_back(s[j]);
        covered[static_cast<std::size_t>(k - 1)][*find(face)] = true;
      }
    }
  }
  for (int k = 0; k <= top; ++k) {
    for (std::size_t i = 0; i < count(k); ++i) {
      if (!covered[static_cast<std::size_t>(k)][i]) {
        const auto s = simplex(k, i);
        out.emplace_back(s.begin(), s.end());
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> remap(vertex_count_, kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= vertex_count_) throw ContractError("induced: vertex out of range");
    remap[keep[i]] = static_cast<Vertex>(i);
  }
  SimplicialComplex out;
  out.vertex_count_ = keep.size();
  out.max_dim_ = max_dim_;
  out.truncated_ = truncated_;
  out.flat_.assign(flat_.size(), {});
  for (std::size_t k = 0; k < flat_.size(); ++k) {
    const std::size_t w = k + 1;
    for (std::size_t i = 0; i < flat_[k].size(); i += w) {
      bool inside = true;
      for (std::size_t j = 0; j < w && inside; ++j) inside = remap[flat_[k][i + j]] != kAbsent;
      if (!inside) continue;
      // remap is increasing, so rows stay sorted.
      for (std::size_t j = 0; j < w; ++j) out.flat_[k].push_back(remap[flat_[k][i + j]]);
    }
  }
  out.build_index();
  return out;
}

SimplicialComplex SimplicialComplex::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != vertex_count_) throw ContractError("relabeled: permutation size mismatch");
  SimplexList gens;
  for (const auto& s : maximal_simplices()) {
    std::vector<Vertex> t;
    for (Vertex v : s) t.push_back(perm[v]);
    gens.push_back(std::move(t));
  }
  auto out = from_maximal(gens, max_dim_, vertex_count_);
  out.truncated_ = truncated_;
  return out;
}

std::vector<std::size_t> component_labels(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < complex.count(1); ++i) {
    const auto e = complex.simplex(1, i);
    const auto a = find(e[0]);
    const auto b = find(e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = find(v);
  return labels;
}

std::size_t component_count(const SimplicialComplex& complex) {
  const auto labels = component_labels(complex);
  std::size_t count = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) count += labels[v] == v ? 1 : 0;
  return count;
}

std::vector<std::size_t> bfs_distances(const SimplicialComplex& complex, Vertex source) {
  std::vector<std::size_t> dist(complex.vertex_count(), std::numeric_limits<std::size_t>::max());
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex u : complex.neighbors(v)) {
      if (dist[u] == std::numeric_limits<std::size_t>::max()) {
        dist[u] = dist[v] + 1;
        queue.push(u);
      }
    }
  }
  return dist;
}

}  // namespace bstopo::simplicial
