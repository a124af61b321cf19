#pragma once

#include <cstddef>
#include <vector>

#include "bstopo/mmspace/space.hpp"

namespace bstopo::mm {

// Pseudo-metric on a subset of the disjoint union of the parts. Point ids
// are global: part j's local point i has id offset_j + i, offsets in part
// order. dist is row-major |points| x |points|.
struct LinkTable {
  std::vector<std::size_t> points;
  std::vector<double> dist;
};

struct AmalgamSpec {
  std::vector<FiniteMMSpace> parts;
  std::vector<LinkTable> links;
};

struct Amalgam {
  FiniteMMSpace space;
  // Global disjoint-union id -> point of `space` after merging zero-distance
  // classes.
  std::vector<std::size_t> index_of;
};

// Chain-infimum pseudo-metric generated by the part metrics and link tables,
// with zero-distance classes merged (weights summed, the class keeps its
// smallest global id's position). Throws MalformedInput if a link table is
// malformed or disagrees with a part, if the chains do not connect every
// point, or if links shorten a distance inside a part.
Amalgam amalgamate(const AmalgamSpec& spec);

}  // namespace bstopo::mm
