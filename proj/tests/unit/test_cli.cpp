#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bstopo/cli/cli.hpp"

using bstopo::cli::run_cli;

namespace {

const std::string fixtures = BSTOPO_FIXTURES;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "bstopo_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("betti on the torus fixture") {
  const auto r = run({"betti", "--input", fixtures + "/torus7.cplx", "--up-to", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 1\n");
  CHECK(run({"betti", "--input", fixtures + "/tetra_boundary.cplx"}).out == "1 0 1\n");
}

TEST_CASE("luck prints the cover table") {
  const auto r = run({"luck", "--wedge", "2", "--cyclic", "10", "--degree", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,vertices,edges,b_d,ratio,closed_form\n10,10,20,11,1.1,11\n");
}

TEST_CASE("thin is byte-identical across runs") {
  const std::vector<std::string> args{"thin", "--space", fixtures + "/circle.mms", "--eps", "0.5", "--seed", "7"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("# separated true") == 0);
  CHECK(run({"thin", "--space", fixtures + "/circle.mms", "--eps", "0.5", "--seed", "8"}).out != a.out);
}

TEST_CASE("--out writes CSV and JSON") {
  const auto dir = scratch();
  const auto path = (dir / "luck.csv").string();
  const auto r = run({"luck", "--wedge", "3", "--cyclic", "2,4", "--out", path});
  CHECK(r.code == 0);
  std::ifstream csv(path);
  std::stringstream buf;
  buf << csv.rdbuf();
  CHECK(buf.str() == r.out);
  std::ifstream js(path + ".json");
  const auto j = nlohmann::json::parse(js);
  CHECK(j["name"] == "luck");
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][1]["ratio"] == 2.25);
  std::filesystem::remove_all(dir);
}

TEST_CASE("config files supply defaults that flags override") {
  const auto dir = scratch();
  const auto cfg = (dir / "luck.conf").string();
  std::ofstream(cfg) << "# luck settings\nwedge = 3\ncyclic = 5\n";
  CHECK(run({"luck", "--config", cfg}).out.find("\n5,5,15,11,2.2,11\n") != std::string::npos);
  CHECK(run({"luck", "--config", cfg, "--wedge", "2"}).out.find("\n5,5,10,6,1.2,6\n") != std::string::npos);
  std::ofstream(cfg) << "this line has no equals sign\n";
  CHECK(run({"luck", "--config", cfg}).code == 2);
  CHECK(run({"luck", "--config", (dir / "missing.conf").string()}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("other subcommands run") {
  CHECK(run({"profile", "--input", fixtures + "/cycle5.cplx", "--radius", "1"}).code == 0);
  CHECK(run({"elek", "--sizes", "6,8", "--radius", "2"}).code == 0);
  CHECK(run({"mvcheck", "--input", fixtures + "/torus7.cplx", "--trials", "5"}).code == 0);
  const auto ch = run({"cheeger", "--circle", "12", "--cap", "64"});
  CHECK(ch.code == 0);
  CHECK(ch.out.find("12,24,0.8333333333333334,12") != std::string::npos);
  const auto nv = run({"nerve", "--space", fixtures + "/circle.mms", "--eps", "0.25", "--seed", "3"});
  CHECK(nv.code == 0);
  CHECK(nv.out.rfind("1 1\n", 0) == 0);
  const auto fo = run({"forest", "--p", "2", "--draws", "200", "--theta", "1 2;2", "--theta-inverse", "1 -2;2"});
  CHECK(fo.code == 0);
  CHECK(fo.out.rfind("delta,same_component,frequency,predicted\n", 0) == 0);
  CHECK(run({"relate", "--space", fixtures + "/path4.mms", "--mu1", "1,0,0,0", "--mu2", "0,1,0,0", "--p1", "0",
             "--p2", "1", "--eps", "1.5", "--radius", "2"})
            .out == "true\n");
  CHECK(run({"relate", "--space", fixtures + "/path4.mms", "--x1", "0,1", "--x2", "2,3", "--p1", "1", "--p2", "2",
             "--eps", "0.5", "--radius", "1"})
            .out == "false\n");
  const auto dir = scratch();
  const auto glued = (dir / "g.cplx").string();
  const auto g = run({"glue", "--input", fixtures + "/hollow_triangle.cplx," + fixtures + "/hollow_triangle.cplx",
                      "--weights", "1/2,1/2", "--multiplier", "2", "--out", glued});
  CHECK(g.code == 0);
  CHECK(run({"betti", "--input", glued}).out == "1 2\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("scale reports the eps estimate") {
  // 48 points on a circle of length 12: ball growth saturates at r = 4.
  const auto r = run({"scale", "--space", fixtures + "/circle.mms", "--trials", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("eps_estimate,max_dist,pairs,", 0) == 0);
  CHECK(r.out.find("\n0.1,2,40,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"betti"}).code == 1);
  CHECK(run({"betti", "--input", fixtures + "/nope.cplx"}).code == 2);
  CHECK(run({"betti", "--input", fixtures + "/torus7.cplx", "--up-to", "x"}).code == 1);
  CHECK(run({"cheeger", "--circle", "12", "--mode", "magic"}).code == 1);
  CHECK(run({"glue", "--input", fixtures + "/hollow_triangle.cplx", "--weights", "1/3"}).code == 1);
  CHECK(run({"thin", "--space", fixtures + "/torus7.cplx"}).code == 2);
  CHECK(run({"betti", "--help"}).code == 0);
}
