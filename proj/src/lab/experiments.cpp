#include "bstopo/lab/experiments.hpp"

#include <algorithm>

#include "bstopo/core/error.hpp"
#include "bstopo/core/random.hpp"
#include "bstopo/mmspace/generators.hpp"
#include "bstopo/simplicial/homology.hpp"
#include "bstopo/simplicial/profile.hpp"

namespace bstopo::lab {

using simplicial::SimplicialComplex;
using simplicial::Vertex;

ExperimentReport luck_experiment(const std::vector<VoltageGraph>& chain, int d, std::optional<Rational> expected_limit,
                                 const std::string& limit_source) {
  if (d != 0 && d != 1) throw ContractError("luck_experiment: graph covers have homology only in degrees 0 and 1");
  ExperimentReport report;
  report.name = "luck";
  report.add_param("d", std::to_string(d));
  report.columns = {"n", "vertices", "edges", "b_d", "ratio"};
  if (d == 1) report.columns.push_back("closed_form");
  report.expected_limit = expected_limit;
  report.expected_limit_source = limit_source;
  bool nested = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& vg = chain[i];
    const auto cover = voltage_cover(vg);
    if (connected_components(cover) != 1) {
      throw ContractError("luck_experiment: cover of degree " + std::to_string(vg.degree) + " is disconnected");
    }
    if (i > 0 && vg.degree % chain[i - 1].degree != 0) nested = false;
    const auto betti = simplicial::betti_numbers(realize(cover), 1);
    const auto b = static_cast<std::int64_t>(betti[static_cast<std::size_t>(d)]);
    const auto n = static_cast<std::int64_t>(vg.degree);
    std::vector<Cell> row{n, static_cast<std::int64_t>(cover.vertex_count),
                          static_cast<std::int64_t>(cover.edges.size()), b, Rational(b, n)};
    if (d == 1) row.emplace_back(cycle_rank(cover));
    report.add_row(std::move(row));
  }
  report.add_param("chain", nested ? "nested" : "non-chain");
  return report;
}

ExperimentReport elek_experiment(const std::vector<SimplicialComplex>& family, int d,
                                 const std::vector<std::size_t>& radii) {
  if (family.empty()) throw ContractError("elek_experiment: empty family");
  ExperimentReport report;
  report.name = "elek";
  report.add_param("d", std::to_string(d));
  report.columns = {"index", "vertices", "max_degree", "b_d", "ratio"};
  for (auto r : radii) report.columns.push_back("tv_r" + std::to_string(r));
  std::vector<simplicial::Profile> last;
  for (auto r : radii) last.push_back(simplicial::local_profile(family.back(), r));
  std::size_t delta = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& K = family[i];
    delta = std::max(delta, K.max_degree());
    const auto b = static_cast<std::int64_t>(simplicial::betti_numbers(K, d)[static_cast<std::size_t>(d)]);
    const auto v = static_cast<std::int64_t>(K.vertex_count());
    std::vector<Cell> row{static_cast<std::int64_t>(i), v, static_cast<std::int64_t>(K.max_degree()), b, Rational(b, v)};
    for (std::size_t j = 0; j < radii.size(); ++j) {
      row.emplace_back(simplicial::profile_distance(simplicial::local_profile(K, radii[j]), last[j]));
    }
    report.add_row(std::move(row));
  }
  report.add_param("max_degree", std::to_string(delta));
  return report;
}

MayerVietorisResult mayer_vietoris_check(const SimplicialComplex& complex, const std::vector<Vertex>& U,
                                         const std::vector<Vertex>& V, int d) {
  const std::size_t n = complex.vertex_count();
  std::vector<char> in_u(n, 0);
  std::vector<char> in_v(n, 0);
  for (auto u : U) {
    if (u >= n) throw ContractError("mayer_vietoris_check: vertex out of range");
    in_u[u] = 1;
  }
  for (auto v : V) {
    if (v >= n) throw ContractError("mayer_vietoris_check: vertex out of range");
    in_v[v] = 1;
  }
  for (const auto& s : complex.maximal_simplices()) {
    const bool inside_u = std::all_of(s.begin(), s.end(), [&](Vertex x) { return in_u[x]; });
    const bool inside_v = std::all_of(s.begin(), s.end(), [&](Vertex x) { return in_v[x]; });
    if (!inside_u && !inside_v) throw ContractError("mayer_vietoris_check: the full subcomplexes do not cover K");
  }
  std::vector<Vertex> uu;
  std::vector<Vertex> both;
  for (std::size_t x = 0; x < n; ++x) {
    if (in_u[x]) uu.push_back(static_cast<Vertex>(x));
    if (in_u[x] && in_v[x]) both.push_back(static_cast<Vertex>(x));
  }
  auto betti_d = [d](const SimplicialComplex& K) -> std::size_t {
    if (K.vertex_count() == 0) return 0;
    return simplicial::betti_numbers(K, d)[static_cast<std::size_t>(d)];
  };
  MayerVietorisResult out;
  out.b_u = betti_d(complex.induced(uu));
  out.b_k = betti_d(complex);
  out.b_inter = betti_d(complex.induced(both));
  out.holds = out.b_u <= out.b_k + out.b_inter;
  return out;
}

CoverSplit random_cover_split(const SimplicialComplex& complex, std::uint64_t seed) {
  const std::size_t n = complex.vertex_count();
  std::vector<char> in_a(n, 0);
  for (std::size_t v = 0; v < n; ++v) in_a[v] = (hash_ids(seed, Stream::Experiment, {v}) & 1) != 0;
  std::vector<char> in_u(in_a);
  for (std::size_t v = 0; v < n; ++v)
    if (in_a[v])
      for (auto u : complex.neighbors(static_cast<Vertex>(v))) in_u[u] = 1;
  CoverSplit out;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_u[v]) out.U.push_back(static_cast<Vertex>(v));
    if (!in_a[v]) out.V.push_back(static_cast<Vertex>(v));
  }
  return out;
}

ExperimentReport cheeger_trend(const std::vector<Rational>& circumferences, const CheegerTrendOptions& options) {
  ExperimentReport report;
  report.name = "cheeger";
  report.seed = options.seed;
  report.add_param("r", format_double(options.r));
  report.add_param("h", format_rational(options.h));
  report.add_param("mode", options.mode == mm::CheegerMode::Exact ? "exact" : "heuristic");
  report.columns = {"L", "points", "h_r", "witness_size"};
  bool monotone = true;
  std::optional<Rational> previous;
  for (const auto& L : circumferences) {
    const auto space = mm::circle_space(L, options.h);
    mm::CheegerOptions co;
    co.mode = options.mode;
    co.exhaustive_cap = options.exhaustive_cap;
    co.seed = options.seed;
    const auto result = mm::cheeger_radius_r(space, options.r, co);
    if (previous && result.value > *previous) monotone = false;
    previous = result.value;
    report.add_row({L, static_cast<std::int64_t>(space.size()), result.value,
                    static_cast<std::int64_t>(result.witness.size())});
  }
  report.add_param("monotone", monotone ? "true" : "false");
  return report;
}

}  // namespace bstopo::lab
