#include "bstopo/simplicial/glue.hpp"

#include <algorithm>
#include <string>

#include "bstopo/core/error.hpp"

namespace bstopo::simplicial {

SimplicialComplex glue_weighted(const WeightedFamily& family) {
  if (family.copy_multiplier <= 0) throw MalformedInput("copy multiplier must be positive");
  if (family.members.empty()) throw MalformedInput("weighted family has no members");
  int max_dim = 0;
  std::vector<std::int64_t> copies;
  for (std::size_t j = 0; j < family.members.size(); ++j) {
    const auto& m = family.members[j];
    if (m.weight <= 0) throw MalformedInput("member " + std::to_string(j) + " has non-positive weight");
    const Rational c = m.weight * family.copy_multiplier;
    if (c.denominator() != 1) {
      throw MalformedInput("D*t is not an integer for member " + std::to_string(j) + " (" + format_rational(c) + ")");
    }
    if (m.complex.vertex_count() == 0 || component_count(m.complex) != 1) {
      throw MalformedInput("member " + std::to_string(j) + " is not connected");
    }
    if (m.complex.truncated()) throw ContractError("member " + std::to_string(j) + " is truncated");
    max_dim = std::max(max_dim, m.complex.max_dim());
    copies.push_back(c.numerator());
  }

  SimplexList generators;
  Vertex offset = 0;
  bool first = true;
  Vertex previous_base = 0;
  for (std::size_t j = 0; j < family.members.size(); ++j) {
    const auto& complex = family.members[j].complex;
    const auto maximal = complex.maximal_simplices();
    for (std::int64_t copy = 0; copy < copies[j]; ++copy) {
      for (const auto& s : maximal) {
        std::vector<Vertex> shifted;
        for (Vertex v : s) shifted.push_back(v + offset);
        generators.push_back(std::move(shifted));
      }
      if (!first) generators.push_back({previous_base, offset});
      first = false;
      previous_base = offset;
      offset += static_cast<Vertex>(complex.vertex_count());
    }
  }
  return SimplicialComplex::from_maximal(generators, std::max(max_dim, 1), offset);
}

}  // namespace bstopo::simplicial
