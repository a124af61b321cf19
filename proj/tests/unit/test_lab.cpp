#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bstopo/core/error.hpp"
#include "bstopo/lab/experiments.hpp"
#include "bstopo/lab/graphs.hpp"
#include "bstopo/lab/report.hpp"
#include "bstopo/simplicial/homology.hpp"
#include "oracles.hpp"

using namespace bstopo;
using namespace bstopo::lab;
using simplicial::betti_numbers;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("voltage covers") {
  const auto base = cyclic_wedge(2, 1);
  const auto g1 = voltage_cover(base);
  CHECK(g1.vertex_count == 1);
  CHECK(g1.edges.size() == 2);

  const auto g = voltage_cover(cyclic_wedge(2, 10));
  CHECK(g.vertex_count == 10);
  CHECK(g.edges.size() == 20);
  CHECK(connected_components(g) == 1);
  CHECK(cycle_rank(g) == 11);

  VoltageGraph ident{3, 4, {{0, 1, {0, 1, 2, 3}}, {1, 2, {0, 1, 2, 3}}, {2, 0, {0, 1, 2, 3}}}};
  const auto copies = voltage_cover(ident);
  CHECK(connected_components(copies) == 4);
  CHECK(cycle_rank(copies) == 4);

  VoltageGraph bad{1, 3, {{0, 0, {0, 0, 1}}}};
  CHECK_THROWS_AS(voltage_cover(bad), MalformedInput);
  VoltageGraph short_perm{1, 3, {{0, 0, {0, 1}}}};
  CHECK_THROWS_AS(voltage_cover(short_perm), MalformedInput);
}

TEST_CASE("realization keeps the homotopy type") {
  for (std::size_t n : {1u, 2u, 5u, 16u}) {
    for (std::size_t r : {1u, 2u, 3u}) {
      const auto g = voltage_cover(cyclic_wedge(r, n));
      const auto K = realize(g);
      CHECK(K.max_dim() == 1);
      const auto b = betti_numbers(K, 1);
      CHECK(b[0] == connected_components(g));
      CHECK(static_cast<std::int64_t>(b[1]) == cycle_rank(g));
      CHECK(b == oracle::snf_betti(K.maximal_simplices(), 1));
    }
  }
}

TEST_CASE("essential girth") {
  CHECK(essential_girth(cycle_graph(6)) == std::optional<std::size_t>(6));
  CHECK(essential_girth(Multigraph{4, {{0, 1}, {1, 2}, {1, 3}}}) == std::nullopt);
  CHECK(essential_girth(Multigraph{2, {{0, 1}, {0, 0}}}) == std::optional<std::size_t>(1));
  CHECK(essential_girth(Multigraph{2, {{0, 1}, {1, 0}}}) == std::optional<std::size_t>(2));
  for (std::size_t n : {5u, 6u, 9u}) CHECK(essential_girth(square_torus_graph(n)) == std::optional<std::size_t>(4));
  CHECK(essential_girth(square_torus_graph(3)) == std::optional<std::size_t>(3));
  CHECK(essential_girth(cycle_complex(7)) == std::optional<std::size_t>(7));
  CHECK(essential_girth(path_complex(4)) == std::nullopt);
}

TEST_CASE("fixture builders") {
  const auto T = triangulated_torus(5);
  CHECK(T.face_counts() == std::vector<std::size_t>{25, 75, 50});
  CHECK(betti_numbers(T, 2) == std::vector<std::size_t>{1, 2, 1});
  CHECK_THROWS_AS(triangulated_torus(2), ContractError);
  CHECK(seven_vertex_torus().face_counts() == std::vector<std::size_t>{7, 21, 14});
  CHECK(betti_numbers(tetrahedron_boundary(), 2) == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti_numbers(wedge_of_circles(4), 1) == std::vector<std::size_t>{1, 4});
  CHECK(betti_numbers(cycle_complex(9), 1) == std::vector<std::size_t>{1, 1});
  CHECK(betti_numbers(path_complex(9), 1) == std::vector<std::size_t>{1, 0});
  const auto sq = square_torus_graph(4);
  CHECK(sq.vertex_count == 16);
  CHECK(sq.edges.size() == 32);
}

TEST_CASE("report CSV and JSON") {
  ExperimentReport r;
  r.name = "demo";
  r.seed = 42;
  r.add_param("eps", "0.5");
  r.columns = {"n", "ratio", "x", "tag"};
  r.add_row({std::int64_t{3}, Rational(11, 10), 0.25, std::string("ok")});
  r.add_row({std::int64_t{4}, Rational(1, 3), 2.0, std::string("fine")});
  r.expected_limit = Rational(1);
  r.expected_limit_source = "closed form";
  CHECK(r.to_csv() == "n,ratio,x,tag\n3,1.1,0.25,ok\n4,0.3333333333333333,2,fine\n");
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["schema_version"] == 1);
  CHECK(j["name"] == "demo");
  CHECK(j["seed"] == 42);
  CHECK(j["params"]["eps"] == "0.5");
  CHECK(j["rows"][0]["ratio"] == 1.1);
  CHECK(j["rows"][1]["tag"] == "fine");
  CHECK(j["expected_limit"] == "1");
  CHECK_THROWS_AS(r.add_row({std::int64_t{1}}), ContractError);
  CHECK_THROWS_AS(r.add_row({std::int64_t{1}, Rational(1), std::nan(""), std::string("x")}), ContractError);

  const auto dir = std::filesystem::temp_directory_path() / "bstopo_report_test";
  std::filesystem::create_directories(dir);
  write_report(r, dir / "demo.csv");
  std::ifstream csv(dir / "demo.csv");
  std::stringstream buf;
  buf << csv.rdbuf();
  CHECK(buf.str() == r.to_csv());
  CHECK(std::filesystem::exists(dir / "demo.csv.json"));
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(write_report(r, "/nonexistent_dir/x.csv"), ParseError);
}

TEST_CASE("normalized Betti numbers along cyclic covers") {
  for (std::size_t r : {2u, 3u, 4u}) {
    std::vector<VoltageGraph> chain;
    for (std::size_t n = 1; n <= 32; n *= 2) chain.push_back(cyclic_wedge(r, n));
    const auto rep = luck_experiment(chain, 1, Rational(static_cast<std::int64_t>(r) - 1), "L2 Betti number of the free group");
    REQUIRE(rep.rows.size() == chain.size());
    CHECK(rep.columns == std::vector<std::string>{"n", "vertices", "edges", "b_d", "ratio", "closed_form"});
    for (const auto& row : rep.rows) {
      const auto n = std::get<std::int64_t>(row[0]);
      CHECK(std::get<Rational>(row[4]) == Rational(static_cast<std::int64_t>(r) - 1) + Rational(1, n));
      CHECK(std::get<std::int64_t>(row[3]) == std::get<std::int64_t>(row[5]));
    }
  }
  const auto b0 = luck_experiment({cyclic_wedge(2, 4)}, 0);
  CHECK(std::get<Rational>(b0.rows[0][4]) == Rational(1, 4));
  CHECK_THROWS_AS(luck_experiment({cyclic_wedge(2, 4)}, 2), ContractError);
  VoltageGraph split{1, 2, {{0, 0, {0, 1}}}};
  CHECK_THROWS_AS(luck_experiment({split}, 1), ContractError);
}

TEST_CASE("Betti ratios and profiles along torus grids") {
  std::vector<simplicial::SimplicialComplex> family;
  for (std::size_t n = 6; n <= 12; n += 2) family.push_back(triangulated_torus(n));
  const auto rep = elek_experiment(family, 1, {1, 2});
  REQUIRE(rep.rows.size() == 4);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const std::int64_t n = 6 + 2 * static_cast<std::int64_t>(i);
    CHECK(std::get<Rational>(rep.rows[i][4]) == Rational(2, n * n));
    CHECK(std::get<Rational>(rep.rows[i][5]) == Rational(0));
    CHECK(std::get<Rational>(rep.rows[i][6]) == Rational(0));
  }
  const auto constant = elek_experiment({seven_vertex_torus(), seven_vertex_torus()}, 2, {1});
  CHECK(constant.rows[0][4] == constant.rows[1][4]);
  CHECK(std::get<Rational>(constant.rows[0][5]) == Rational(0));
}

TEST_CASE("Mayer-Vietoris bound") {
  const auto c6 = cycle_complex(6);
  const auto r = mayer_vietoris_check(c6, {0, 1, 2, 3}, {3, 4, 5, 0}, 1);
  CHECK(r.holds);
  CHECK(r.b_u == 0);
  CHECK(r.b_k == 1);
  CHECK(r.b_inter == 0);
  const auto full = mayer_vietoris_check(c6, {0, 1, 2, 3, 4, 5}, {2}, 1);
  CHECK(full.holds);
  CHECK(full.b_u == full.b_k);
  CHECK_THROWS_AS(mayer_vietoris_check(c6, {0, 1, 2}, {3, 4, 5}, 1), ContractError);

  for (const auto& K : {seven_vertex_torus(), triangulated_torus(6), wedge_of_circles(3)}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto split = random_cover_split(K, seed);
      for (int d : {0, 1}) CHECK(mayer_vietoris_check(K, split.U, split.V, d).holds);
    }
  }
}

TEST_CASE("Cheeger trend along circles") {
  CheegerTrendOptions opt;
  opt.exhaustive_cap = 64;
  const auto rep = cheeger_trend({Rational(12), Rational(24)}, opt);
  REQUIRE(rep.rows.size() == 2);
  CHECK(std::get<Rational>(rep.rows[0][2]) == Rational(5, 6));
  CHECK(std::get<Rational>(rep.rows[1][2]) == Rational(5, 12));
  bool monotone_param = false;
  for (const auto& [k, v] : rep.params)
    if (k == "monotone") monotone_param = v == "true";
  CHECK(monotone_param);
  const auto again = cheeger_trend({Rational(12), Rational(12)}, opt);
  CHECK(again.rows[0][2] == again.rows[1][2]);
}
