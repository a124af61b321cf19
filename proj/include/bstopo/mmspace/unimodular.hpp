#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bstopo/core/rational.hpp"
#include "bstopo/mmspace/space.hpp"

namespace bstopo::mm {

// Isomorphism-class key of (space, p, q): equal exactly when a
// weight-preserving isometry maps p to p' and q to q'. Distances are compared
// bit for bit.
std::string doubly_pointed_code(const FiniteMMSpace& space, std::size_t p, std::size_t q);

// Compares lambda_l(p,q) = root_law(p) * weight(q) with
// lambda_r(p,q) = weight(p) * root_law(q) after bucketing ordered pairs by
// doubly_pointed_code. Throws ContractError unless root_law is a
// non-negative vector summing to 1.
bool unimodular_check(const FiniteMMSpace& space, const std::vector<Rational>& root_law);

}  // namespace bstopo::mm
