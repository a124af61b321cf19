#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bstopo/lab/graphs.hpp"
#include "bstopo/lab/report.hpp"
#include "bstopo/mmspace/cheeger.hpp"
#include "bstopo/simplicial/complex.hpp"

namespace bstopo::lab {

// Columns: n, vertices, edges, b_d, ratio (= b_d / n), and for d = 1 the
// closed form E - V + 1. Throws ContractError if a cover is disconnected or
// d is not 0 or 1.
ExperimentReport luck_experiment(const std::vector<VoltageGraph>& chain, int d,
                                 std::optional<Rational> expected_limit = std::nullopt,
                                 const std::string& limit_source = "");

// Columns: index, vertices, max_degree, b_d, ratio (= b_d / |V|) and one
// tv_r<r> column per radius with the profile distance to the last member.
ExperimentReport elek_experiment(const std::vector<simplicial::SimplicialComplex>& family, int d,
                                 const std::vector<std::size_t>& radii);

struct MayerVietorisResult {
  bool holds = false;
  std::size_t b_u = 0;      // b_d of the full subcomplex on U
  std::size_t b_k = 0;      // b_d of K
  std::size_t b_inter = 0;  // b_d of the full subcomplex on U ∩ V
};

// Checks b_d(K^U) <= b_d(K) + b_d(K^U ∩ K^V). Throws ContractError unless
// every simplex of K lies in K^U or K^V.
MayerVietorisResult mayer_vietoris_check(const simplicial::SimplicialComplex& complex,
                                         const std::vector<simplicial::Vertex>& U,
                                         const std::vector<simplicial::Vertex>& V, int d);

struct CoverSplit {
  std::vector<simplicial::Vertex> U;
  std::vector<simplicial::Vertex> V;
};

// Random A with each vertex kept with probability 1/2; U = A plus its
// 1-skeleton neighbours, V = the complement of A. Always a cover.
CoverSplit random_cover_split(const simplicial::SimplicialComplex& complex, std::uint64_t seed);

struct CheegerTrendOptions {
  double r = 1.0;
  Rational h{1, 2};
  mm::CheegerMode mode = mm::CheegerMode::Exact;
  std::size_t exhaustive_cap = 24;
  std::uint64_t seed = 1;
};

// Columns: L, points, h_r (exact rational), witness_size. Param "monotone"
// records whether h_r is non-increasing along the listed circumferences.
ExperimentReport cheeger_trend(const std::vector<Rational>& circumferences, const CheegerTrendOptions& options);

}  // namespace bstopo::lab
