#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace bstopo::sampling {

// Reduced word in the free group on generators s_1..s_r; letter +j is s_j,
// -j its inverse.
using Word = std::vector<int>;

// Cancels adjacent inverse pairs.
Word free_reduce(const Word& w);
bool is_reduced(const Word& w);
Word inverse(const Word& w);

// Element (f, n) of F_r ⋊_θ Z with (f, n)(g, m) = (f θ^n(g), n + m).
struct SemidirectElement {
  Word word;
  int level = 0;
  friend auto operator<=>(const SemidirectElement&, const SemidirectElement&) = default;
};

struct ForestParams {
  int rank = 2;
  // theta[j] is the reduced image of s_{j+1}.
  std::vector<Word> theta;
  // Images of the generators under θ^{-1}; required when level_lo < 0.
  std::vector<Word> theta_inverse;
  std::size_t word_cutoff = 2;
  int level_lo = 0;
  int level_hi = 4;
  int p = 2;
};

struct ForestSample {
  int offset = 0;  // the uniform i in {0, ..., p-1}
  std::vector<SemidirectElement> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::map<SemidirectElement, std::size_t> index;
};

// One draw of the random forest on the truncation {|f| <= word_cutoff,
// level_lo <= n <= level_hi}: horizontal edges (f,m)-(f θ^m(s_j), m) when
// p divides m - i, vertical edges (f,m)-(f,m+1) when p does not divide
// m - i - 1, kept when both ends lie in the truncation.
// Throws MalformedInput for a non-reduced or out-of-range theta image and
// ContractError for inconsistent parameters.
ForestSample forest_sample(const ForestParams& params, std::uint64_t seed);

// Union-find check that the edge set has no cycle.
bool is_forest(std::size_t node_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Component label per node.
std::vector<std::size_t> forest_components(const ForestSample& sample);

}  // namespace bstopo::sampling
