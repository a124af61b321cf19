#pragma once

#include <cstdint>
#include <vector>

#include "bstopo/core/rational.hpp"
#include "bstopo/simplicial/complex.hpp"

namespace bstopo::simplicial {

struct WeightedMember {
  SimplicialComplex complex;
  Rational weight;
};

struct WeightedFamily {
  std::vector<WeightedMember> members;
  std::int64_t copy_multiplier = 1;
};

// D*t_j disjoint copies of each member, in member order, with consecutive
// copies joined by an edge between their lowest-index vertices.
// Throws MalformedInput if some D*t_j is not a positive integer or a member
// is empty or disconnected, ContractError if a member was truncated.
SimplicialComplex glue_weighted(const WeightedFamily& family);

}  // namespace bstopo::simplicial
