#include "bstopo/nerve/nerve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bstopo/core/error.hpp"
#include "bstopo/core/random.hpp"

namespace bstopo::nerve {

using simplicial::Vertex;

RadiiAssignment sample_radii(const sampling::PointConfig& config, double eps, std::uint64_t seed) {
  if (!(eps > 0.0)) throw ContractError("sample_radii: eps must be positive");
  RadiiAssignment out;
  out.eps = eps;
  out.rho.reserve(config.size());
  for (auto p : config.points) {
    const double u = uniform_open_closed(seed, Stream::Radius, {p});
    out.rho.push_back(std::min(6.0 * eps, 5.0 * eps + eps * u));
  }
  return out;
}

simplicial::SimplexList nerve_facets(const mm::FiniteMMSpace& space, const sampling::PointConfig& config,
                                     const RadiiAssignment& radii, const mm::PointSet& witnesses) {
  if (radii.rho.size() != config.size()) throw ContractError("nerve_complex: one radius per config point required");
  mm::PointSet wit = witnesses;
  if (wit.empty()) {
    wit.resize(space.size());
    std::iota(wit.begin(), wit.end(), 0);
  }
  const mm::Subcloud cloud(space, wit);
  // cover[w] = centers whose ball contains witness w, in increasing order.
  std::vector<std::vector<Vertex>> cover(wit.size());
  std::vector<double> row(wit.size());
  std::vector<std::uint32_t> hits;
  for (std::size_t k = 0; k < config.size(); ++k) {
    cloud.distances_from(config.points[k], row);
    hits.clear();
    kernels::select_below(row, radii.rho[k], true, hits);
    for (auto w : hits) cover[w].push_back(static_cast<Vertex>(k));
  }
  // Every simplex is a subset of some witness's cover set, so the maximal
  // cover sets generate the nerve.
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  std::stable_sort(cover.begin(), cover.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::vector<std::size_t>> kept_at(config.size());
  simplicial::SimplexList facets;
  for (auto& s : cover) {
    if (s.empty()) continue;
    Vertex pivot = s[0];
    for (Vertex v : s)
      if (kept_at[v].size() < kept_at[pivot].size()) pivot = v;
    bool dominated = false;
    for (auto f : kept_at[pivot]) {
      if (std::includes(facets[f].begin(), facets[f].end(), s.begin(), s.end())) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    for (Vertex v : s) kept_at[v].push_back(facets.size());
    facets.push_back(std::move(s));
  }
  return facets;
}

simplicial::SimplicialComplex nerve_complex(const mm::FiniteMMSpace& space, const sampling::PointConfig& config,
                                            const RadiiAssignment& radii, const mm::PointSet& witnesses,
                                            int max_dim) {
  return simplicial::SimplicialComplex::from_maximal(nerve_facets(space, config, radii, witnesses), max_dim,
                                                     config.size());
}

std::size_t max_degree_of(const simplicial::SimplexList& facets, std::size_t vertex_count) {
  std::vector<std::vector<std::size_t>> incident(vertex_count);
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (Vertex v : facets[f]) incident.at(v).push_back(f);
  std::vector<std::size_t> seen(vertex_count, std::numeric_limits<std::size_t>::max());
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::size_t deg = 0;
    for (auto f : incident[v])
      for (Vertex u : facets[f])
        if (u != v && seen[u] != v) {
          seen[u] = v;
          ++deg;
        }
    best = std::max(best, deg);
  }
  return best;
}

CollapsedFacets strong_collapse(simplicial::SimplexList facets, std::size_t vertex_count) {
  std::vector<std::vector<std::size_t>> incident(vertex_count);
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (Vertex v : facets[f]) {
      if (v >= vertex_count) throw ContractError("strong_collapse: vertex id out of range");
      incident[v].push_back(f);
    }
  }
  std::vector<char> facet_alive(facets.size(), 1);
  std::vector<char> vertex_alive(vertex_count, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) vertex_alive[v] = !incident[v].empty();
  auto compact = [&](Vertex v) {
    auto& inc = incident[v];
    inc.erase(std::remove_if(inc.begin(), inc.end(), [&](std::size_t f) { return !facet_alive[f]; }), inc.end());
  };

  std::vector<std::uint32_t> count(vertex_count, 0);
  std::vector<Vertex> touched;
  std::vector<Vertex> queue;
  std::vector<char> queued(vertex_count, 0);
  for (std::size_t v = vertex_count; v-- > 0;) {
    if (vertex_alive[v]) {
      queue.push_back(static_cast<Vertex>(v));
      queued[v] = 1;
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    queued[v] = 0;
    if (!vertex_alive[v]) continue;
    compact(v);
    const auto& inc = incident[v];
    touched.clear();
    for (auto f : inc)
      for (Vertex u : facets[f])
        if (count[u]++ == 0) touched.push_back(u);
    bool dominated = false;
    for (Vertex u : touched) {
      if (u != v && count[u] == inc.size()) dominated = true;
      count[u] = 0;
    }
    if (!dominated) continue;

    vertex_alive[v] = 0;
    const auto owned = incident[v];
    incident[v].clear();
    for (auto f : owned) {
      auto& s = facets[f];
      s.erase(std::lower_bound(s.begin(), s.end(), v));
      // s still holds the dominating vertex, so it is nonempty. It stays
      // maximal unless another facet contains it.
      Vertex pivot = s[0];
      for (Vertex u : s)
        if (incident[u].size() < incident[pivot].size()) pivot = u;
      for (auto g : incident[pivot]) {
        if (g == f || !facet_alive[g]) continue;
        if (std::includes(facets[g].begin(), facets[g].end(), s.begin(), s.end())) {
          facet_alive[f] = 0;
          break;
        }
      }
      for (Vertex u : s) {
        if (!queued[u]) {
          queued[u] = 1;
          queue.push_back(u);
        }
      }
    }
  }

  CollapsedFacets out;
  std::vector<Vertex> renumber(vertex_count, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (vertex_alive[v]) {
      renumber[v] = static_cast<Vertex>(out.kept.size());
      out.kept.push_back(static_cast<Vertex>(v));
    }
  }
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (!facet_alive[f]) continue;
    auto s = std::move(facets[f]);
    for (auto& u : s) u = renumber[u];
    out.facets.push_back(std::move(s));
  }
  return out;
}

mm::PointSet select_witnesses(const mm::FiniteMMSpace& space, double density) {
  const std::size_t n = space.size();
  mm::PointSet out;
  if (density <= space.resolution()) {
    out.resize(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::vector<char> covered(n, 0);
  std::vector<double> row(n);
  std::vector<std::uint32_t> near;
  for (std::size_t i = 0; i < n; ++i) {
    if (covered[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    space.distance_row(i, row);
    near.clear();
    kernels::select_below(row, density, true, near);
    for (auto j : near) covered[j] = 1;
  }
  return out;
}

NerveResult net_to_nerve(const mm::FiniteMMSpace& space, const NerveParams& params) {
  if (!(params.eps > 0.0)) throw ContractError("net_to_nerve: eps must be positive");
  NerveResult out;
  out.config = sampling::thin(space, {params.eps, params.stages, params.intensity, params.seed});
  out.radii = sample_radii(out.config, params.eps, params.seed);
  const double density = params.witness_density > 0.0 ? params.witness_density : space.resolution();
  auto facets = nerve_facets(space, out.config, out.radii, select_witnesses(space, density));
  out.facet_count = facets.size();
  const std::size_t full_degree = max_degree_of(facets, out.config.size());
  if (params.collapse) {
    auto core = strong_collapse(std::move(facets), out.config.size());
    out.kept = std::move(core.kept);
    out.complex = simplicial::SimplicialComplex::from_maximal(core.facets, params.max_dim, out.kept.size());
  } else {
    out.kept.resize(out.config.size());
    std::iota(out.kept.begin(), out.kept.end(), 0);
    out.complex = simplicial::SimplicialComplex::from_maximal(facets, params.max_dim, out.config.size());
  }

  auto& diag = out.diagnostics;
  const auto check = sampling::separated_covering_check(space, out.config, params.eps);
  diag.separated = check.separated;
  diag.covering_radius = check.covering_radius;
  diag.max_degree = full_degree;
  if (out.config.size() > 0) {
    std::vector<double> row(space.size());
    std::vector<std::uint32_t> near;
    bool first = true;
    for (auto p : out.config.points) {
      space.distance_row(p, row);
      near.clear();
      kernels::select_below(row, params.eps / 2.0, true, near);
      const Rational small = space.volume_of(near);
      near.clear();
      kernels::select_below(row, 20.0 * params.eps, true, near);
      const Rational large = space.volume_of(near);
      if (first || small < diag.v0) diag.v0 = small;
      if (first || large > diag.v1) diag.v1 = large;
      first = false;
    }
    diag.degree_bound_holds = Rational(static_cast<std::int64_t>(diag.max_degree)) * diag.v0 <= diag.v1;
  }
  return out;
}

}  // namespace bstopo::nerve
