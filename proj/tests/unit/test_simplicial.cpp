#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "bstopo/core/error.hpp"
#include "bstopo/lab/graphs.hpp"
#include "bstopo/simplicial/complex.hpp"
#include "bstopo/simplicial/complex_io.hpp"
#include "bstopo/simplicial/glue.hpp"
#include "bstopo/simplicial/homology.hpp"
#include "bstopo/simplicial/profile.hpp"
#include "bstopo/simplicial/rooted.hpp"
#include "oracles.hpp"

using namespace bstopo;
using namespace bstopo::simplicial;

namespace {

const std::string fixtures = BSTOPO_FIXTURES;

SimplexList rp2_facets() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
}

SimplexList random_generators(std::mt19937& rng, std::size_t n, std::size_t count, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  SimplexList out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(n, size(rng)));
    out.push_back(all);
  }
  return out;
}

}  // namespace

TEST_CASE("from_maximal builds closures") {
  auto K = SimplicialComplex::from_maximal({{0, 1, 2}}, 2);
  CHECK(K.vertex_count() == 3);
  CHECK(K.face_counts() == std::vector<std::size_t>{3, 3, 1});
  CHECK_FALSE(K.truncated());

  auto E = SimplicialComplex::from_maximal({}, 2);
  CHECK(E.vertex_count() == 0);
  CHECK(E.top_dim() == -1);

  auto T = SimplicialComplex::from_maximal({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 2);
  CHECK(T.face_counts() == std::vector<std::size_t>{4, 6, 4});

  CHECK_THROWS_AS(SimplicialComplex::from_maximal({{0, 1, 1}}), MalformedInput);
}

TEST_CASE("truncation is recorded and limits the Betti range") {
  auto K = SimplicialComplex::from_maximal({{0, 1, 2, 3, 4}}, 2);
  CHECK(K.truncated());
  CHECK(K.top_dim() == 2);
  CHECK(betti_numbers(K, 1) == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(betti_numbers(K, 2), ContractError);
  auto L = SimplicialComplex::from_maximal({{0, 1, 2}}, 2);
  CHECK(betti_numbers(L, 2) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("lookup, neighbours and maximal simplices") {
  auto K = lab::seven_vertex_torus();
  const std::vector<Vertex> tri{0, 1, 3};
  CHECK(K.contains(tri));
  const std::vector<Vertex> missing{0, 1, 2};
  CHECK_FALSE(K.contains(missing));
  CHECK(K.degree(0) == 6);
  CHECK(K.max_degree() == 6);
  CHECK(K.maximal_simplices().size() == 14);
  for (std::size_t i = 0; i < K.count(1); ++i) {
    const auto e = K.simplex(1, i);
    CHECK(K.find(e) == std::optional<std::size_t>(i));
  }
}

TEST_CASE("fixture Betti numbers match the Smith normal form oracle") {
  struct Case {
    const char* file;
    int up_to;
    std::vector<std::size_t> expected;
  };
  for (const auto& c : std::vector<Case>{{"hollow_triangle.cplx", 1, {1, 1}},
                                         {"tetra_boundary.cplx", 2, {1, 0, 1}},
                                         {"torus7.cplx", 2, {1, 2, 1}},
                                         {"wedge2.cplx", 1, {1, 2}},
                                         {"wedge3.cplx", 1, {1, 3}}}) {
    INFO(c.file);
    const auto K = read_complex(fixtures + "/" + c.file);
    const auto got = betti_numbers(K, c.up_to);
    CHECK(got == c.expected);
    CHECK(got == oracle::snf_betti(K.maximal_simplices(), c.up_to));
  }
}

TEST_CASE("torsion does not leak into rational Betti numbers") {
  const auto K = SimplicialComplex::from_maximal(rp2_facets(), 3);
  CHECK(betti_numbers(K, 2) == std::vector<std::size_t>{1, 0, 0});
  const auto faces = oracle::all_faces(rp2_facets(), 2);
  const auto snf = oracle::smith_normal_form(oracle::boundary_matrix(faces[1], faces[2]));
  CHECK(snf.rank == 10);
  CHECK(snf.invariant_factors.back() == 2);
  CHECK(oracle::snf_betti(rp2_facets(), 2) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("random complexes agree with the oracle, union-find and Euler characteristic") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 5 + trial % 5;
    const auto gens = random_generators(rng, n, 3 + trial % 7, 4);
    const auto K = SimplicialComplex::from_maximal(gens, 3, n);
    const auto b = betti_numbers(K, 2);
    INFO("trial " << trial);
    CHECK(b == oracle::snf_betti(gens, 2, n));
    CHECK(b[0] == oracle::union_find_components(n, gens));
    CHECK(b[0] == component_count(K));
    const auto full = betti_numbers(K, 3);
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < full.size(); ++k) alt += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(full[k]);
    CHECK(alt == euler_characteristic(K));
    for (int k = 0; k <= 2; ++k) {
      const std::size_t lower = k == 0 ? 0 : coboundary_rank(K, k - 1);
      CHECK(b[static_cast<std::size_t>(k)] == K.count(k) - coboundary_rank(K, k) - lower);
    }
  }
}

TEST_CASE("Betti numbers are invariant under relabelling") {
  std::mt19937 rng(7);
  const auto K = lab::seven_vertex_torus();
  for (int t = 0; t < 10; ++t) {
    std::vector<Vertex> perm(K.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto R = K.relabeled(perm);
    CHECK(betti_numbers(R, 2) == std::vector<std::size_t>{1, 2, 1});
    CHECK(R.face_counts() == K.face_counts());
  }
}

TEST_CASE("Euler characteristic examples") {
  CHECK(euler_characteristic(lab::tetrahedron_boundary()) == 2);
  CHECK(euler_characteristic(lab::cycle_complex(3)) == 0);
  CHECK(euler_characteristic(lab::seven_vertex_torus()) == 0);
}

TEST_CASE("larger complexes: triangulated torus and 3-sphere") {
  CHECK(betti_numbers(lab::triangulated_torus(10), 2) == std::vector<std::size_t>{1, 2, 1});
  // Boundary of the 4-simplex is a 3-sphere.
  SimplexList s3;
  for (Vertex skip = 0; skip < 5; ++skip) {
    std::vector<Vertex> f;
    for (Vertex v = 0; v < 5; ++v)
      if (v != skip) f.push_back(v);
    s3.push_back(f);
  }
  const auto S = SimplicialComplex::from_maximal(s3, 3);
  CHECK(betti_numbers(S, 3) == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("closed balls") {
  const auto tri = make_rooted(lab::cycle_complex(3), 0);
  CHECK(closed_ball(tri, 1).complex.face_counts() == std::vector<std::size_t>{3, 3});
  CHECK(closed_ball(tri, 0).complex.vertex_count() == 1);
  const auto path = make_rooted(lab::path_complex(5), 0);
  const auto b = closed_ball(path, 2);
  CHECK(b.complex.face_counts() == std::vector<std::size_t>{3, 2});
  CHECK(b.root == 0);
  CHECK_THROWS_AS(make_rooted(lab::path_complex(3), 5), ContractError);
}

TEST_CASE("root isomorphism examples") {
  CHECK(root_isomorphic(make_rooted(lab::cycle_complex(3), 0), make_rooted(lab::cycle_complex(3), 2)));
  CHECK_FALSE(root_isomorphic(make_rooted(lab::cycle_complex(3), 0), make_rooted(lab::path_complex(3), 0)));
  const auto star = SimplicialComplex::from_maximal({{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(root_isomorphic(make_rooted(star, 0), make_rooted(star, 1)));
  CHECK(root_isomorphic(make_rooted(star, 1), make_rooted(star, 3)));
  // A filled triangle and a hollow one share a 1-skeleton.
  CHECK_FALSE(root_isomorphic(make_rooted(SimplicialComplex::from_maximal({{0, 1, 2}}), 0),
                              make_rooted(lab::cycle_complex(3), 0)));
}

TEST_CASE("canonical code examples") {
  CHECK(canonical_code(make_rooted(lab::cycle_complex(3), 0)) == canonical_code(make_rooted(lab::cycle_complex(3), 1)));
  CHECK(canonical_code(make_rooted(lab::path_complex(5), 0)) != canonical_code(make_rooted(lab::path_complex(5), 2)));
  std::mt19937 rng(3);
  const auto K = lab::seven_vertex_torus();
  for (int t = 0; t < 10; ++t) {
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Vertex root = static_cast<Vertex>(t % 7);
    CHECK(canonical_code(make_rooted(K, root)) == canonical_code(make_rooted(K.relabeled(perm), perm[root])));
  }
}

namespace {

// Smallest edge bitmask over root-fixing relabellings of a graph on n vertices.
std::uint32_t brute_canonical_graph(std::uint32_t mask, int n, const std::vector<std::pair<int, int>>& pairs,
                                    const std::map<std::pair<int, int>, int>& pair_bit) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t m = 0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (!(mask >> e & 1)) continue;
      int a = perm[static_cast<std::size_t>(pairs[e].first)], b = perm[static_cast<std::size_t>(pairs[e].second)];
      if (a > b) std::swap(a, b);
      m |= 1u << pair_bit.at({a, b});
    }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

}  // namespace

TEST_CASE("canonical code separates exactly the rooted isomorphism classes of 6-vertex graphs") {
  const int n = 6;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_bit;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      pair_bit[{a, b}] = static_cast<int>(pairs.size());
      pairs.push_back({a, b});
    }
  std::map<std::string, std::uint32_t> code_to_canon;
  std::map<std::uint32_t, std::string> canon_to_code;
  bool consistent = true;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    SimplexList edges;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) edges.push_back({static_cast<Vertex>(pairs[e].first), static_cast<Vertex>(pairs[e].second)});
    const auto code = canonical_code(make_rooted(SimplicialComplex::from_maximal(edges, 3, n), 0));
    const auto canon = brute_canonical_graph(mask, n, pairs, pair_bit);
    const auto [it1, new1] = code_to_canon.emplace(code, canon);
    const auto [it2, new2] = canon_to_code.emplace(canon, code);
    if (it1->second != canon || it2->second != code) consistent = false;
  }
  CHECK(consistent);
  CHECK(code_to_canon.size() == canon_to_code.size());
}

TEST_CASE("canonical code and root_isomorphic agree with brute force on complexes with triangles") {
  std::mt19937 rng(99);
  std::size_t agree = 0, iso_pairs = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 4 + static_cast<std::size_t>(t % 3);
    auto ga = random_generators(rng, n, 4, 3);
    // Half of the pairs are relabelled copies, half independent.
    SimplexList gb;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    if (t % 2 == 0) {
      for (auto s : ga) {
        for (auto& v : s) v = perm[v];
        gb.push_back(s);
      }
    } else {
      gb = random_generators(rng, n, 4, 3);
    }
    const auto A = SimplicialComplex::from_maximal(ga, 3, n);
    const auto B = SimplicialComplex::from_maximal(gb, 3, n);
    const Vertex ra = 0;
    const Vertex rb = t % 2 == 0 ? perm[0] : 0;
    const bool brute = oracle::brute_root_isomorphic(A.maximal_simplices(), n, ra, B.maximal_simplices(), n, rb);
    const bool by_code = canonical_code(make_rooted(A, ra)) == canonical_code(make_rooted(B, rb));
    const bool by_search = root_isomorphic(make_rooted(A, ra), make_rooted(B, rb));
    agree += (brute == by_code && brute == by_search);
    iso_pairs += brute;
  }
  CHECK(agree == 400);
  CHECK(iso_pairs >= 200);
}

TEST_CASE("local profiles") {
  const auto c8 = local_profile(lab::cycle_complex(8), 1);
  REQUIRE(c8.masses.size() == 1);
  CHECK(c8.masses.begin()->second == Rational(1));

  const auto p10 = local_profile(lab::path_complex(10), 1);
  REQUIRE(p10.masses.size() == 2);
  std::vector<Rational> masses;
  for (const auto& [code, m] : p10.masses) masses.push_back(m);
  std::sort(masses.begin(), masses.end());
  CHECK(masses == std::vector<Rational>{Rational(1, 5), Rational(4, 5)});

  CHECK(local_profile(lab::cycle_complex(5), 1).masses == local_profile(lab::cycle_complex(6), 1).masses);
  CHECK(profile_distance(p10, p10) == Rational(0));
  CHECK(profile_distance(local_profile(lab::cycle_complex(3), 1), local_profile(lab::path_complex(2), 1)) ==
        Rational(1));
  CHECK(profile_distance(p10, local_profile(lab::cycle_complex(10), 1)) == Rational(1, 5));

  CHECK_THROWS_AS(local_profile(lab::cycle_complex(5), 0), ContractError);
  CHECK_THROWS_AS(local_profile(SimplicialComplex{}, 1), MalformedInput);
  CHECK_THROWS_AS(profile_distance(c8, local_profile(lab::cycle_complex(8), 2)), ContractError);
}

TEST_CASE("weighted gluing") {
  WeightedFamily one{{{lab::cycle_complex(3), Rational(1)}}, 1};
  const auto g1 = glue_weighted(one);
  CHECK(g1.face_counts() == lab::cycle_complex(3).face_counts());

  WeightedFamily two{{{lab::cycle_complex(3), Rational(1, 2)}, {lab::cycle_complex(3), Rational(1, 2)}}, 2};
  const auto g2 = glue_weighted(two);
  CHECK(g2.vertex_count() == 6);
  CHECK(betti_numbers(g2, 1) == std::vector<std::size_t>{1, 2});

  WeightedFamily tor{{{lab::seven_vertex_torus(), Rational(1)}}, 3};
  const auto g3 = glue_weighted(tor);
  CHECK(betti_numbers(g3, 2) == std::vector<std::size_t>{1, 6, 3});

  WeightedFamily bad_weight{{{lab::cycle_complex(3), Rational(1, 3)}}, 2};
  CHECK_THROWS_AS(glue_weighted(bad_weight), MalformedInput);
  WeightedFamily disconnected{{{SimplicialComplex::from_maximal({{0, 1}, {2, 3}}), Rational(1)}}, 1};
  CHECK_THROWS_AS(glue_weighted(disconnected), MalformedInput);
  WeightedFamily truncated{{{SimplicialComplex::from_maximal({{0, 1, 2, 3, 4}}, 2), Rational(1)}}, 1};
  CHECK_THROWS_AS(glue_weighted(truncated), ContractError);
}

TEST_CASE("complex text format") {
  const auto K = parse_complex("# comment\n\n2 0 1\n1 2\n3\n");
  CHECK(K.vertex_count() == 4);
  CHECK(K.face_counts() == std::vector<std::size_t>{4, 3, 1});
  CHECK(format_complex(K) == "0 1 2\n3\n");
  CHECK(parse_complex(format_complex(lab::seven_vertex_torus()), 2) == lab::seven_vertex_torus());
  CHECK_THROWS_AS(parse_complex("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("0 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("0 0 1\n"), MalformedInput);
  CHECK_THROWS_AS(read_complex(fixtures + "/does_not_exist.cplx"), ParseError);
}
