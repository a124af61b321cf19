#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "bstopo/core/rational.hpp"
#include "bstopo/simplicial/complex.hpp"

namespace bstopo::simplicial {

// Empirical law of the root-isomorphism class of the radius-r ball around a
// uniformly random vertex, keyed by canonical code.
struct Profile {
  std::size_t radius = 1;
  std::map<std::string, Rational> masses;
};

// Throws MalformedInput for the empty complex, ContractError for r == 0.
Profile local_profile(const SimplicialComplex& complex, std::size_t r);

// Total variation distance. Throws ContractError on a radius mismatch.
Rational profile_distance(const Profile& p, const Profile& q);

}  // namespace bstopo::simplicial
