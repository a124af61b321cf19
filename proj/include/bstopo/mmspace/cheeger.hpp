#pragma once

#include <cstddef>
#include <cstdint>

#include "bstopo/core/rational.hpp"
#include "bstopo/mmspace/space.hpp"

namespace bstopo::mm {

struct Collar {
  PointSet boundary;  // points of M with a point outside M within h
  PointSet collar;    // points of the whole space within r of the boundary
  Rational collar_volume{0};
};

// Throws ContractError if M is empty or the whole space.
Collar boundary_and_collar(const FiniteMMSpace& space, const PointSet& M, double r, double h);

enum class CheegerMode { Exact, Heuristic };

struct CheegerOptions {
  CheegerMode mode = CheegerMode::Exact;
  // Largest point count accepted by exact enumeration.
  std::size_t exhaustive_cap = 24;
  std::uint64_t seed = 1;
  std::size_t anneal_steps = 20000;
};

struct CheegerResult {
  Rational value{0};
  PointSet witness;
};

// min vol(N_r(boundary M)) / vol(M) over subsets M that are connected in the
// graph joining points at distance <= resolution and have vol(M) <= vol/2.
// Exact mode enumerates every such subset; heuristic mode returns the best
// of a ball sweep and simulated annealing, an upper bound on the exact value.
// Throws ContractError for r <= 0, or in exact mode above the cap.
CheegerResult cheeger_radius_r(const FiniteMMSpace& space, double r, const CheegerOptions& options = {});

// Majority-ball set M' = {p : vol(A ∩ B(p,r)) > vol(B(p,r))/2}, reduced to
// its h-connected component of least collar-to-volume ratio (collar radius h;
// the whole space has ratio 0). Ties go to the component with the smallest
// point index. Empty if M' is empty.
PointSet haircut(const FiniteMMSpace& space, const PointSet& A, double r);

// Components of `points` in the h-adjacency graph, each sorted, ordered by
// smallest member.
std::vector<PointSet> h_components(const FiniteMMSpace& space, const PointSet& points, double h);

}  // namespace bstopo::mm
