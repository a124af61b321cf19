#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bstopo/core/rational.hpp"
#include "bstopo/mmspace/space.hpp"
#include "bstopo/sampling/thinning.hpp"
#include "bstopo/simplicial/complex.hpp"

namespace bstopo::nerve {

// rho[k] is the radius of config point k.
struct RadiiAssignment {
  double eps = 1.0;
  std::vector<double> rho;
};

// Independent uniforms on [5 eps, 6 eps] keyed on (seed, point id).
RadiiAssignment sample_radii(const sampling::PointConfig& config, double eps, std::uint64_t seed);

// Nerve of the open balls B°(s, rho(s)) tested at witness points: vertex k
// is config point k, and S spans a simplex (|S| <= max_dim + 1) iff some
// witness w has dist(w, s) < rho(s) for all s in S. An empty witness set
// means every space point.
simplicial::SimplicialComplex nerve_complex(const mm::FiniteMMSpace& space, const sampling::PointConfig& config,
                                            const RadiiAssignment& radii, const mm::PointSet& witnesses,
                                            int max_dim = simplicial::kDefaultMaxDim);

// The maximal simplices of the same nerve, untruncated, each sorted.
simplicial::SimplexList nerve_facets(const mm::FiniteMMSpace& space, const sampling::PointConfig& config,
                                     const RadiiAssignment& radii, const mm::PointSet& witnesses);

// Largest vertex degree of the complex generated by `facets`, computed
// without enumerating faces.
std::size_t max_degree_of(const simplicial::SimplexList& facets, std::size_t vertex_count);

struct CollapsedFacets {
  simplicial::SimplexList facets;     // over renumbered vertices 0..kept.size()-1
  std::vector<simplicial::Vertex> kept;  // original id of each surviving vertex
};

// Removes dominated vertices (v is dominated by v' when every maximal
// simplex containing v also contains v') until none is left. Each removal is
// a strong collapse, so the result is homotopy equivalent to the input.
// `facets` must be the maximal simplices of the complex.
CollapsedFacets strong_collapse(simplicial::SimplexList facets, std::size_t vertex_count);

// Greedy subset of the space in which every point lies within `density` of
// a chosen witness (strictly closer than density unless density is at most
// the resolution, which selects every point).
mm::PointSet select_witnesses(const mm::FiniteMMSpace& space, double density);

struct NerveParams {
  double eps = 1.0;
  double intensity = 1.0;
  std::uint32_t stages = 5;
  std::uint64_t seed = 0;
  int max_dim = simplicial::kDefaultMaxDim;
  // <= 0 means the space resolution.
  double witness_density = 0.0;
  // Build the complex from the strong-collapse core instead of the full
  // nerve. Betti numbers agree; vertex ids then refer to NerveResult::kept.
  bool collapse = false;
};

struct NerveDiagnostics {
  bool separated = true;
  double covering_radius = 0.0;
  std::size_t max_degree = 0;  // of the full nerve
  Rational v0{0};  // min over centers of vol B°(s, eps/2)
  Rational v1{0};  // max over centers of vol B°(s, 20 eps)
  bool degree_bound_holds = true;  // max_degree <= v1 / v0
};

struct NerveResult {
  simplicial::SimplicialComplex complex;
  std::vector<simplicial::Vertex> kept;  // config index of each complex vertex
  std::size_t facet_count = 0;           // maximal simplices of the full nerve
  sampling::PointConfig config;
  RadiiAssignment radii;
  NerveDiagnostics diagnostics;
};

// thin -> sample_radii -> nerve_complex, with diagnostics.
NerveResult net_to_nerve(const mm::FiniteMMSpace& space, const NerveParams& params);

}  // namespace bstopo::nerve
