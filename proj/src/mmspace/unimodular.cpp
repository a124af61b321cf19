#include "bstopo/mmspace/unimodular.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>

#include "bstopo/core/error.hpp"

namespace bstopo::mm {
namespace {

void append_u64(std::string& out, std::uint64_t x) {
  for (int b = 7; b >= 0; --b) out.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
}

// Individualization-refinement over the complete weighted graph whose edge
// labels are exact distance bits.
class PairCanonizer {
 public:
  PairCanonizer(const std::vector<double>& dist, std::size_t n, const std::vector<Rational>& weights)
      : dist_(dist), n_(n) {
    // Initial classes from weights alone; roots are applied per query.
    std::vector<Rational> distinct(weights);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    weight_class_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      weight_class_[i] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), weights[i]) -
                                                   distinct.begin());
    weights_ = &weights;
  }

  std::string code(std::size_t p, std::size_t q) {
    std::vector<std::uint32_t> colors(n_);
    for (std::size_t i = 0; i < n_; ++i) colors[i] = 2 + weight_class_[i];
    colors[q] = 1;
    colors[p] = 0;
    best_.reset();
    search(std::move(colors));
    std::string out;
    append_u64(out, p == q ? 1 : 0);
    return out + *best_;
  }

 private:
  double d(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }

  void refine(std::vector<std::uint32_t>& colors) const {
    std::size_t cells = count(colors);
    std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>> keys(n_);
    while (true) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& key = keys[v];
        key.first = colors[v];
        key.second.clear();
        for (std::size_t u = 0; u < n_; ++u) {
          if (u == v) continue;
          key.second.push_back(std::bit_cast<std::uint64_t>(d(v, u)));
          key.second.push_back(colors[u]);
        }
        // Sort (distance, colour) pairs.
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        for (std::size_t i = 0; i < key.second.size(); i += 2) pairs.emplace_back(key.second[i], key.second[i + 1]);
        std::sort(pairs.begin(), pairs.end());
        key.second.clear();
        for (auto& [a, b] : pairs) {
          key.second.push_back(a);
          key.second.push_back(b);
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
      const std::size_t now = count(colors);
      if (now == cells) return;
      cells = now;
    }
  }

  static std::size_t count(const std::vector<std::uint32_t>& colors) {
    std::vector<std::uint32_t> s(colors);
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  std::string serialize(const std::vector<std::uint32_t>& label) const {
    std::vector<std::size_t> at(n_);
    for (std::size_t v = 0; v < n_; ++v) at[label[v]] = v;
    std::string out;
    append_u64(out, n_);
    for (std::size_t a = 0; a < n_; ++a) {
      const auto& w = (*weights_)[at[a]];
      append_u64(out, static_cast<std::uint64_t>(w.numerator()));
      append_u64(out, static_cast<std::uint64_t>(w.denominator()));
      for (std::size_t b = a + 1; b < n_; ++b) append_u64(out, std::bit_cast<std::uint64_t>(d(at[a], at[b])));
    }
    return out;
  }

  bool swappable(std::size_t u, std::size_t v) const {
    if ((*weights_)[u] != (*weights_)[v]) return false;
    for (std::size_t x = 0; x < n_; ++x) {
      if (x == u || x == v) continue;
      if (d(u, x) != d(v, x)) return false;
    }
    return true;
  }

  void search(std::vector<std::uint32_t> colors) {
    refine(colors);
    std::vector<std::size_t> size(n_, 0);
    for (auto c : colors) ++size[c];
    std::optional<std::uint32_t> target;
    for (std::uint32_t c = 0; c < n_; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    if (!target) {
      auto s = serialize(colors);
      if (!best_ || s < *best_) best_ = std::move(s);
      return;
    }
    std::vector<std::size_t> explored;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != *target) continue;
      bool twin = false;
      for (auto u : explored)
        if (swappable(u, v)) {
          twin = true;
          break;
        }
      if (twin) continue;
      explored.push_back(v);
      auto next = colors;
      for (std::size_t x = 0; x < n_; ++x) next[x] = colors[x] * 2 + ((colors[x] == *target && x != v) ? 1 : 0);
      search(std::move(next));
    }
  }

  const std::vector<double>& dist_;
  std::size_t n_;
  std::vector<std::uint32_t> weight_class_;
  const std::vector<Rational>* weights_ = nullptr;
  std::optional<std::string> best_;
};

}  // namespace

std::string doubly_pointed_code(const FiniteMMSpace& space, std::size_t p, std::size_t q) {
  if (p >= space.size() || q >= space.size()) throw ContractError("doubly_pointed_code: point out of range");
  const auto dense = space.dense();
  PairCanonizer c(dense, space.size(), space.weights());
  return c.code(p, q);
}

bool unimodular_check(const FiniteMMSpace& space, const std::vector<Rational>& root_law) {
  const std::size_t n = space.size();
  if (root_law.size() != n) throw ContractError("unimodular_check: root law has the wrong length");
  Rational total(0);
  for (const auto& x : root_law) {
    if (x < 0) throw ContractError("unimodular_check: negative root probability");
    total += x;
  }
  if (total != 1) throw ContractError("unimodular_check: root law does not sum to 1");
  const auto dense = space.dense();
  PairCanonizer canon(dense, n, space.weights());
  std::map<std::string, std::pair<Rational, Rational>> buckets;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Rational left = root_law[p] * space.weight(q);
      const Rational right = space.weight(p) * root_law[q];
      if (left == 0 && right == 0) continue;
      auto& b = buckets[canon.code(p, q)];
      b.first += left;
      b.second += right;
    }
  }
  return std::all_of(buckets.begin(), buckets.end(), [](const auto& kv) { return kv.second.first == kv.second.second; });
}

}  // namespace bstopo::mm
