#include <catch_amalgamated.hpp>

#include <cmath>

#include "bstopo/core/error.hpp"
#include "bstopo/mmspace/generators.hpp"
#include "bstopo/sampling/forest.hpp"
#include "bstopo/sampling/poisson.hpp"
#include "bstopo/sampling/thinning.hpp"

using namespace bstopo;
using namespace bstopo::sampling;

namespace {

mm::FiniteMMSpace two_points(double d) {
  return mm::FiniteMMSpace::from_matrix({0, d, d, 0}, {Rational(1), Rational(1)});
}

ForestParams rank2(int p) {
  ForestParams fp;
  fp.rank = 2;
  fp.theta = {{1, 2}, {2}};
  fp.theta_inverse = {{1, -2}, {2}};
  fp.word_cutoff = 2;
  fp.level_lo = 0;
  fp.level_hi = 4;
  fp.p = p;
  return fp;
}

}  // namespace

TEST_CASE("Poisson sampling") {
  const auto c = mm::circle_space(Rational(3), Rational(1, 4));
  CHECK(poisson_sample(c, 0.0, 1).config.size() == 0);
  const auto a = poisson_sample(c, 5.0, 9, 2);
  const auto b = poisson_sample(c, 5.0, 9, 2);
  CHECK(a.config.points == b.config.points);
  CHECK(a.config.marks == b.config.marks);
  CHECK(std::is_sorted(a.config.points.begin(), a.config.points.end()));
  for (double m : a.config.marks) {
    CHECK(m > 0.0);
    CHECK(m <= 1.0);
  }
  CHECK(a.arrivals >= a.config.size());
  CHECK(poisson_sample(c, 5.0, 9, 3).config.points != a.config.points);

  // Volume 3 at intensity 2: 6 arrivals on average.
  const int draws = 10000;
  double sum = 0;
  for (int s = 0; s < draws; ++s) sum += static_cast<double>(poisson_sample(c, 2.0, static_cast<std::uint64_t>(s)).arrivals);
  CHECK(std::fabs(sum / draws - 6.0) < 3.0 * std::sqrt(6.0 / draws));
}

TEST_CASE("thinning kernel") {
  CHECK(kernel_phi(0.5, 1.0) == 1.0);
  CHECK(kernel_phi(1.0, 1.0) == 1.0);
  CHECK(kernel_phi(2.0, 1.0) == 0.0);
  CHECK(kernel_phi(1.5, 1.0) == 0.5);
  CHECK(pair_variable(3, 1, 5, 2, 9) == pair_variable(3, 2, 9, 1, 5));
}

TEST_CASE("thinning small cases") {
  const auto one = mm::FiniteMMSpace::from_matrix({0}, {Rational(1)});
  const auto single = thin(one, {1.0, 1, 50.0, 4});
  CHECK(single.size() == 1);

  const auto far = two_points(2.5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(thin(far, {1.0, 1, 50.0, seed}).size() == 2);

  const auto near = two_points(0.5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto cand = poisson_sample(near, 50.0, seed, 1).config;
    REQUIRE(cand.size() == 2);
    const auto kept = thin(near, {1.0, 1, 50.0, seed});
    REQUIRE(kept.size() == 1);
    const std::size_t winner = cand.marks[0] > cand.marks[1] ? 0 : 1;
    CHECK(kept.points[0] == cand.points[winner]);
  }
  CHECK_THROWS_AS(thin(near, {0.0, 1, 1.0, 0}), ContractError);
  CHECK_THROWS_AS(thin(near, {1.0, 0, 1.0, 0}), ContractError);
}

TEST_CASE("thinning output is separated, deterministic and seed dependent") {
  const double eps = 0.5;
  const auto c = mm::circle_space(Rational(50), Rational(1, 8));
  const auto a = thin(c, {eps, 5, 4.0 / eps, 1});
  const auto b = thin(c, {eps, 5, 4.0 / eps, 1});
  CHECK(a.points == b.points);
  CHECK(a.marks == b.marks);
  CHECK(a.stages == b.stages);
  CHECK(thin(c, {eps, 5, 4.0 / eps, 2}).points != a.points);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto cfg = thin(c, {eps, 5, 4.0 / eps, seed});
    CHECK(std::is_sorted(cfg.points.begin(), cfg.points.end()));
    const auto rep = separated_covering_check(c, cfg, eps);
    CHECK(rep.separated);
    CHECK(rep.covering_radius < 3 * eps);
  }
}

TEST_CASE("separation check edge cases") {
  const auto c = mm::circle_space(Rational(4), Rational(1, 2));
  const auto empty = separated_covering_check(c, {}, 1.0);
  CHECK(empty.separated);
  CHECK(std::isinf(empty.covering_radius));
  PointConfig all;
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    all.points.push_back(i);
    all.marks.push_back(1.0);
    all.stages.push_back(1);
  }
  const auto full = separated_covering_check(c, all, 1.0);
  CHECK_FALSE(full.separated);
  CHECK(full.covering_radius == 0.0);
}

TEST_CASE("free group words") {
  CHECK(free_reduce({1, 2, -2, -1, 2}) == Word{2});
  CHECK(is_reduced({1, 2, 1}));
  CHECK_FALSE(is_reduced({1, -1}));
  CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(free_reduce({}) == Word{});
}

TEST_CASE("forest sampler structure") {
  for (int p : {1, 2, 3, 4, 8}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto s = forest_sample(rank2(p), seed);
      CHECK(s.offset >= 0);
      CHECK(s.offset < p);
      CHECK(is_forest(s.nodes.size(), s.edges));
      CHECK(s.nodes.size() == 17 * 5);
    }
  }
  // p = 1: no vertical edges, so components never span two levels.
  const auto s = forest_sample(rank2(1), 0);
  const auto comp = forest_components(s);
  for (const auto& [a, b] : s.edges) CHECK(s.nodes[a].level == s.nodes[b].level);
  const auto e0 = s.index.at({{}, 0});
  const auto e1 = s.index.at({{}, 1});
  CHECK(comp[e0] != comp[e1]);

  auto neg = rank2(2);
  neg.level_lo = -2;
  CHECK(is_forest(forest_sample(neg, 3).nodes.size(), forest_sample(neg, 3).edges));
  neg.theta_inverse.clear();
  CHECK_THROWS_AS(forest_sample(neg, 3), ContractError);
  auto bad = rank2(2);
  bad.theta = {{1, -1}, {2}};
  CHECK_THROWS_AS(forest_sample(bad, 0), MalformedInput);
  CHECK(is_forest(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(is_forest(3, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST_CASE("forest same-component frequency") {
  const int draws = 10000;
  const auto fp = rank2(4);
  int same = 0;
  for (int t = 0; t < draws; ++t) {
    const auto s = forest_sample(fp, static_cast<std::uint64_t>(t));
    const auto comp = forest_components(s);
    same += comp[s.index.at({{}, 0})] == comp[s.index.at({{}, 1})];
  }
  const double freq = static_cast<double>(same) / draws;
  const double sigma = std::sqrt(0.75 * 0.25 / draws);
  CHECK(std::fabs(freq - 0.75) < 3.0 * sigma);
}
