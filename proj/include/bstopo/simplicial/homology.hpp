#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bstopo/simplicial/complex.hpp"

namespace bstopo::simplicial {

// Betti numbers b_0..b_up_to over the rationals. up_to may equal max_dim
// only when no generating simplex was cut off; otherwise b_max_dim is not
// determined by the stored faces and the request throws ContractError.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, int up_to);

// Alternating sum of face counts over every stored dimension.
std::int64_t euler_characteristic(const SimplicialComplex& complex);

// Rank over Q of the coboundary map from k-cochains to (k+1)-cochains, without
// clearing. Used as a cross-check of the reduction in betti_numbers.
std::size_t coboundary_rank(const SimplicialComplex& complex, int k);

}  // namespace bstopo::simplicial
