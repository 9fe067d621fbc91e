#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "prodrange/json_io.hpp"
#include "test_util.hpp"

using namespace prodrange;
using namespace prodrange::testing;
namespace fs = std::filesystem;

#ifndef PRODRANGE_CLI_PATH
#define PRODRANGE_CLI_PATH "prodrange"
#endif

namespace {

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "prodrange_cli_tests";
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args, const fs::path& stderr_to = {}) {
  std::string cmd = std::string(PRODRANGE_CLI_PATH) + " " + args;
  if (!stderr_to.empty()) cmd += " 2>" + stderr_to.string();
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("matrix JSON round trip") {
  ComplexMatrix x = random_matrix({2, 3}, 1200);
  json j = matrix_to_json(x);
  ComplexMatrix y = matrix_from_json(j, "test");
  CHECK(x.dims() == y.dims());
  CHECK(x.entries() == y.entries());
  CHECK_THROWS_AS(matrix_from_json(json{{"dims", {2}}, {"entries", {1, 2}}}, "test"), ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(json{{"dims", {3}}, {"entries", {json::array({1.0, 0.0})}}}, "test"),
      ParseError);
}

TEST_CASE("region JSON round trip across representations") {
  PlanarRegion poly = PlanarRegion::polygon({{0, 0}, {1, 0}, {0.5, 1.0}});
  PlanarRegion back = region_from_json(region_to_json(poly), "test");
  CHECK(back.is_polygon());
  CHECK(back.pts == poly.pts);

  RasterMask m(Complex(-1, -1), 0.25, 9, 7);
  m.set(3, 4);
  m.set(0, 0);
  PlanarRegion rast = PlanarRegion::raster(m);
  PlanarRegion back2 = region_from_json(region_to_json(rast), "test");
  REQUIRE(back2.is_raster());
  CHECK(back2.mask.on == m.on);
  CHECK(back2.mask.cell == m.cell);
  CHECK(back2.mask.origin == m.origin);
}

TEST_CASE("cli runs the core pipeline with deterministic outputs") {
  fs::path dir = scratch_dir();
  save_matrix((dir / "a.json").string(), ComplexMatrix::diag({1.0, 0.0, 0.0, Complex(0, 1)}, {2, 2}));

  fs::path out1 = dir / "out1", out2 = dir / "out2";
  CHECK(run_cli("pnr-sample --input " + (dir / "a.json").string() + " --samples 2000 --seed 3 " +
                "--threads 1 --output " + out1.string()) == 0);
  CHECK(run_cli("pnr-sample --input " + (dir / "a.json").string() + " --samples 2000 --seed 3 " +
                "--threads 2 --output " + out2.string()) == 0);
  std::string s1 = slurp(out1 / "pnr_sample.json");
  std::string s2 = slurp(out2 / "pnr_sample.json");
  REQUIRE(!s1.empty());
  CHECK(s1 == s2);  // byte-identical across thread counts
}

TEST_CASE("cli reports bad input with exit code 2 and a JSON error") {
  fs::path dir = scratch_dir();
  {
    std::ofstream bad(dir / "bad.json");
    bad << "{ not json";
  }
  fs::path err = dir / "stderr.txt";
  CHECK(run_cli("numrange --input " + (dir / "bad.json").string() + " --output " +
                    (dir / "o").string(),
                err) == 2);
  json j = json::parse(slurp(err));
  CHECK(j.contains("error"));
  CHECK(j["error"]["type"] == "ParseError");

  CHECK(run_cli("numrange --input " + (dir / "missing.json").string() + " --output " +
                    (dir / "o").string(),
                err) == 2);
}

TEST_CASE("cli reports numeric failures with exit code 3") {
  fs::path dir = scratch_dir();
  // non-Hermitian input for the see-saw
  save_matrix((dir / "nh.json").string(),
              ComplexMatrix::diag({1.0, Complex(0, 1), 0.0, 0.0}, {2, 2}));
  fs::path err = dir / "stderr3.txt";
  CHECK(run_cli("pnr-seesaw --input " + (dir / "nh.json").string() + " --output " +
                    (dir / "o").string(),
                err) == 3);
  json j = json::parse(slurp(err));
  CHECK(j["error"]["type"] == "NumericError");
}

TEST_CASE("cli check mode passes on healthy inputs") {
  fs::path dir = scratch_dir();
  save_matrix((dir / "fig1.json").string(),
              ComplexMatrix::diag({1.0, 0.0, 0.0, Complex(0, 1)}, {2, 2}));
  CHECK(run_cli("pnr-param --input " + (dir / "fig1.json").string() +
                " --grid 24 --check --output " + (dir / "chk").string() + " >/dev/null") == 0);
  json report = json::parse(slurp(dir / "chk" / "pnr-param_check.json"));
  CHECK(report["pass"] == true);

  save_matrix((dir / "h.json").string(), hermitian_part(random_matrix({2, 2}, 1300)));
  CHECK(run_cli("pnr-seesaw --input " + (dir / "h.json").string() + " --restarts 8 --check " +
                "--output " + (dir / "chk2").string() + " >/dev/null") == 0);
  CHECK(run_cli("schmidt --input " + (dir / "h.json").string() + " --check --output " +
                (dir / "chk3").string() + " >/dev/null") == 0);
}

TEST_CASE("cli figure subcommand emits svg, mask, and topology") {
  fs::path dir = scratch_dir() / "fig";
  CHECK(run_cli("figure fig1 --grid 96 --resolution 256 --output " + dir.string()) == 0);
  CHECK(fs::exists(dir / "fig1.svg"));
  CHECK(fs::exists(dir / "fig1_mask.pbm"));
  json topo = json::parse(slurp(dir / "fig1_topology.json"));
  CHECK(topo["genus"] == 0);
  CHECK(topo["isConvex"] == false);
  // PBM header sanity
  std::string pbm = slurp(dir / "fig1_mask.pbm");
  CHECK(pbm.substr(0, 2) == "P1");
}

TEST_CASE("cli numerical range and boundary formats") {
  fs::path dir = scratch_dir();
  save_matrix((dir / "m.json").string(), random_matrix({3}, 1400));
  CHECK(run_cli("numrange --input " + (dir / "m.json").string() + " --format csv --output " +
                (dir / "nr").string()) == 0);
  std::string csv = slurp(dir / "nr" / "numrange.csv");
  CHECK(csv.substr(0, 20) == std::string("theta,support,re,im""\n").substr(0, 20));

  CHECK(run_cli("minkowski --op sum --input " + (dir / "r1.json").string() + " --input " +
                    (dir / "r2.json").string() + " --output " + (dir / "mk").string(),
                dir / "e.txt") == 2);  // missing files
}

TEST_CASE("cli entangled-subspace and bounds") {
  fs::path dir = scratch_dir();
  CHECK(run_cli("entangled-subspace --K 2 --M 2 --output " + (dir / "es").string()) == 0);
  json sub = json::parse(slurp(dir / "es" / "entangled_subspace.json"));
  CHECK(sub["basis"].size() == 1);

  save_matrix((dir / "hb.json").string(), hermitian_part(random_matrix({2, 2}, 1500)));
  CHECK(run_cli("bounds --input " + (dir / "hb.json").string() + " --restarts 8 --output " +
                (dir / "bd").string()) == 0);
  json rep = json::parse(slurp(dir / "bd" / "bounds.json"));
  CHECK(rep["lowerIdx"] == 3);
  CHECK(rep["upperIdx"] == 2);
}
