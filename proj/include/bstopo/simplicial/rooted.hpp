#pragma once

#include <cstddef>
#include <string>

#include "bstopo/simplicial/complex.hpp"

namespace bstopo::simplicial {

struct RootedComplex {
  SimplicialComplex complex;
  Vertex root = 0;
};

// Throws ContractError if root is not a vertex.
RootedComplex make_rooted(SimplicialComplex complex, Vertex root);

// Full subcomplex on the vertices within 1-skeleton distance r of the root,
// renumbered in increasing original id.
RootedComplex closed_ball(const RootedComplex& rooted, std::size_t r);

// Backtracking search for a simplicial isomorphism taking root to root.
bool root_isomorphic(const RootedComplex& a, const RootedComplex& b);

// Byte string that is equal for two rooted complexes exactly when they are
// root-isomorphic: the smallest serialization over vertex orderings reached
// by colour refinement and individualization, with the root first.
std::string canonical_code(const RootedComplex& rooted);

}  // namespace bstopo::simplicial
