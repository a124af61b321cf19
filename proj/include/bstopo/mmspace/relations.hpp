#pragma once

#include <cstddef>
#include <vector>

#include "bstopo/core/rational.hpp"
#include "bstopo/mmspace/space.hpp"

namespace bstopo::mm {

// Two pointed atomic measures inside a common ambient space; mu1[i] and
// mu2[i] are the masses at ambient point i.
struct PointedMeasurePair {
  const FiniteMMSpace* ambient = nullptr;
  std::vector<Rational> mu1;
  std::vector<Rational> mu2;
  std::size_t p1 = 0;
  std::size_t p2 = 0;
};

// (eps, R)-relatedness with strict inequalities: dist(p1, p2) < eps and, for
// every F inside the closed ball B(p1, R), mu1(F) < mu2(N°(F, eps)) + eps,
// and the same with the roles swapped. Decided by a max-flow computation:
// the worst F has deficiency mu1(A) - maxflow, A = atoms of mu1 in the ball.
// Throws ContractError on a malformed pair.
bool related_measures(const PointedMeasurePair& pair, const Rational& eps, const Rational& R);

// max over F of mu1(F) - mu2(N°(F, eps)) for F among the mu1-atoms in the
// closed ball B(p, R). Exposed for tests.
Rational worst_deficiency(const FiniteMMSpace& ambient, const std::vector<Rational>& mu1,
                          const std::vector<Rational>& mu2, std::size_t p, double eps, double R);

// B(p1,R) ∩ X1 ⊂ N°(X2, eps), B(p2,R) ∩ X2 ⊂ N°(X1, eps) and dist(p1,p2) < eps.
bool related_subsets(const FiniteMMSpace& ambient, const PointSet& X1, const PointSet& X2, std::size_t p1,
                     std::size_t p2, double eps, double R);

}  // namespace bstopo::mm
