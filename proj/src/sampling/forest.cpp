#include "bstopo/sampling/forest.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "bstopo/core/error.hpp"
#include "bstopo/core/random.hpp"

namespace bstopo::sampling {
namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Applies an endomorphism given by generator images to a word.
Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int letter : w) {
    const auto& img = images[static_cast<std::size_t>(std::abs(letter) - 1)];
    if (letter > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const auto inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

void check_images(const std::vector<Word>& images, int rank, const char* name) {
  if (images.size() != static_cast<std::size_t>(rank)) {
    throw MalformedInput(std::string(name) + " must give one image per generator");
  }
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (int letter : images[j])
      if (letter == 0 || std::abs(letter) > rank) {
        throw MalformedInput(std::string(name) + " image " + std::to_string(j + 1) + " uses an unknown letter");
      }
    if (!is_reduced(images[j])) {
      throw MalformedInput(std::string(name) + " image " + std::to_string(j + 1) + " is not reduced");
    }
    if (images[j].empty()) throw MalformedInput(std::string(name) + " image " + std::to_string(j + 1) + " is trivial");
  }
}

}  // namespace

Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

ForestSample forest_sample(const ForestParams& params, std::uint64_t seed) {
  if (params.rank <= 0) throw ContractError("forest_sample: rank must be positive");
  if (params.p <= 0) throw ContractError("forest_sample: p must be positive");
  if (params.word_cutoff == 0) throw ContractError("forest_sample: word_cutoff must be positive");
  if (params.level_lo > params.level_hi) throw ContractError("forest_sample: empty level range");
  check_images(params.theta, params.rank, "theta");
  const bool negative = params.level_lo < 0;
  if (negative) {
    if (params.theta_inverse.empty()) throw ContractError("forest_sample: negative levels need theta_inverse");
    check_images(params.theta_inverse, params.rank, "theta_inverse");
    for (int j = 1; j <= params.rank; ++j) {
      if (substitute(substitute(Word{j}, params.theta_inverse), params.theta) != Word{j}) {
        throw ContractError("forest_sample: theta_inverse is not inverse to theta");
      }
    }
  }

  ForestSample out;
  out.offset = static_cast<int>(hash_ids(seed, Stream::ForestOffset, {}) % static_cast<std::uint64_t>(params.p));

  // Reduced words of length <= cutoff, by length then lexicographically.
  std::vector<Word> words{Word{}};
  for (std::size_t start = 0, len = 0; len < params.word_cutoff; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = start; i < end; ++i) {
      for (int j = -params.rank; j <= params.rank; ++j) {
        if (j == 0) continue;
        if (!words[i].empty() && words[i].back() == -j) continue;
        auto w = words[i];
        w.push_back(j);
        words.push_back(std::move(w));
      }
    }
    start = end;
  }
  for (int m = params.level_lo; m <= params.level_hi; ++m) {
    for (const auto& w : words) {
      out.index.emplace(SemidirectElement{w, m}, out.nodes.size());
      out.nodes.push_back(SemidirectElement{w, m});
    }
  }

  // gens[m - level_lo][j] = θ^m(s_{j+1}).
  std::vector<std::vector<Word>> gens;
  for (int m = params.level_lo; m <= params.level_hi; ++m) {
    std::vector<Word> g;
    for (int j = 1; j <= params.rank; ++j) {
      Word w{j};
      const auto& images = m >= 0 ? params.theta : params.theta_inverse;
      for (int t = 0; t < std::abs(m); ++t) w = substitute(w, images);
      g.push_back(std::move(w));
    }
    gens.push_back(std::move(g));
  }

  const int p = params.p;
  auto divides = [p](int x) { return ((x % p) + p) % p == 0; };
  for (std::size_t a = 0; a < out.nodes.size(); ++a) {
    const auto& [f, m] = out.nodes[a];
    if (divides(m - out.offset)) {
      for (const auto& g : gens[static_cast<std::size_t>(m - params.level_lo)]) {
        Word fg(f);
        fg.insert(fg.end(), g.begin(), g.end());
        auto it = out.index.find(SemidirectElement{free_reduce(fg), m});
        if (it != out.index.end()) out.edges.emplace_back(a, it->second);
      }
    }
    if (m < params.level_hi && !divides(m - out.offset - 1)) {
      out.edges.emplace_back(a, out.index.at(SemidirectElement{f, m + 1}));
    }
  }
  return out;
}

bool is_forest(std::size_t node_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  UnionFind uf(node_count);
  for (auto [a, b] : edges)
    if (!uf.unite(a, b)) return false;
  return true;
}

std::vector<std::size_t> forest_components(const ForestSample& sample) {
  UnionFind uf(sample.nodes.size());
  for (auto [a, b] : sample.edges) uf.unite(a, b);
  std::vector<std::size_t> out(sample.nodes.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = uf.find(i);
  return out;
}

}  // namespace bstopo::sampling
