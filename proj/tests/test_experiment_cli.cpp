#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pathlab/config.hpp"
#include "pathlab/experiment.hpp"

using namespace pathlab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pathlab_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ExperimentConfig parse(const std::string& text) {
  return ExperimentConfig::from_keyvalues(KeyValues::parse_text(text));
}

}  // namespace

TEST_CASE("config parsing: comments, overrides, round trips") {
  KeyValues kv = KeyValues::parse_text(
      "# a comment\n"
      "experiment=generate\n"
      "generator.kind=line  # trailing comment\n"
      "scheme.levels=2\n");
  const auto cfg = ExperimentConfig::from_keyvalues(kv);
  CHECK(cfg.generator_kind == "line");
  CHECK(cfg.n_levels == 2);

  // serialization parses back to the same resolved config
  const std::string text = cfg.to_keyvalues().serialize();
  const auto again = ExperimentConfig::from_keyvalues(KeyValues::parse_text(text));
  CHECK(again.to_keyvalues().serialize() == text);
}

TEST_CASE("config rejection: unknown keys, bad values, bad syntax") {
  CHECK_THROWS_AS(parse("experiment=generate\nnot.a.key=1\n"), ConfigError);
  CHECK_THROWS_AS(parse("experiment=unheard-of\n"), ConfigError);
  CHECK_THROWS_AS(parse("experiment=tails\ngenerator.lambda=-5\n"), ConfigError);
  CHECK_THROWS_AS(parse("experiment=tails\ngenerator.alpha=oops\n"), ConfigError);
  CHECK_THROWS_AS(parse("experiment=generate\nexperiment=generate\n"), ConfigError);
  CHECK_THROWS_AS(parse("experiment generate\n"), ConfigError);
  CHECK_THROWS_AS(parse("experiment=replicate\ngenerator.hurst=1.5\n"), ConfigError);
  CHECK_THROWS_AS(parse("experiment=replicate\nfunctional.kind=mystery\n"), ConfigError);
}

TEST_CASE("schemas text pins the exact headers") {
  const auto text = csv_schemas_text();
  CHECK(text.find("replicate: seed,level,mesh,checkpoint_t,target,initial,follmer_wealth,error") !=
        std::string::npos);
  CHECK(text.find("qv-convergence: seed,level,mesh,t,qv_estimate") != std::string::npos);
  CHECK(text.find("strategy-compare: seed,level,node_t,cf_value,bsv_value,abs_diff") !=
        std::string::npos);
  CHECK(text.find("cov-decompose: seed,level,term,value,residual") != std::string::npos);
  CHECK(text.find("tails: alpha,n_jumps,hill_k,hill_estimate") != std::string::npos);
  CHECK(text.find("generate: t,value") != std::string::npos);
}

TEST_CASE("generate experiment: one row per grid point, deterministic rerun") {
  const auto cfg = parse(
      "experiment=generate\n"
      "generator.kind=brownian\n"
      "scheme.levels=1\n"
      "scheme.base_intervals=64\n");
  const auto dir1 = fresh_dir("gen1");
  const auto dir2 = fresh_dir("gen2");
  const auto r1 = run_experiment(cfg, dir1);
  CHECK(r1.exit_code == 0);

  const std::string csv = slurp(dir1 / "generate.csv");
  std::size_t rows = 0;
  for (char c : csv) rows += (c == '\n');
  CHECK(rows == 65 + 1);  // grid points plus header
  CHECK(csv.substr(0, 8) == "t,value\n");

  // rerun from the emitted manifest: byte-identical artifacts
  const auto manifest_cfg =
      ExperimentConfig::from_keyvalues(KeyValues::parse_file((dir1 / "manifest").string()));
  const auto r2 = run_experiment(manifest_cfg, dir2);
  CHECK(r2.exit_code == 0);
  CHECK(slurp(dir1 / "generate.csv") == slurp(dir2 / "generate.csv"));
  CHECK(slurp(dir1 / "manifest") == slurp(dir2 / "manifest"));
  CHECK(slurp(dir1 / "summary") == slurp(dir2 / "summary"));
}

TEST_CASE("qv experiment on the deterministic ramp passes exactly") {
  const auto cfg = parse(
      "experiment=qv-convergence\n"
      "generator.kind=line\n"
      "ensemble.seeds=3\n"
      "scheme.levels=3\n"
      "scheme.base_intervals=64\n");
  const auto dir = fresh_dir("qvline");
  const auto r = run_experiment(cfg, dir);
  CHECK(r.exit_code == 0);
  CHECK(r.summary.find("PASS") != std::string::npos);
  const std::string csv = slurp(dir / "qv-convergence.csv");
  std::size_t rows = 0;
  for (char c : csv) rows += (c == '\n');
  CHECK(rows == 3 * 3 + 1);
}

TEST_CASE("replicate experiment emits one row per seed and level by default") {
  const auto cfg = parse(
      "experiment=replicate\n"
      "generator.kind=model\n"
      "generator.z_kind=fbm\n"
      "ensemble.seeds=10\n"
      "scheme.levels=3\n"
      "scheme.base_intervals=128\n");
  const auto dir = fresh_dir("rep");
  const auto r = run_experiment(cfg, dir);
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(dir / "replicate.csv");
  std::size_t rows = 0;
  for (char c : csv) rows += (c == '\n');
  CHECK(rows == 10 * 3 + 1);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "seed,level,mesh,checkpoint_t,target,initial,follmer_wealth,error");

  // asking for every checkpoint quadruples the rows
  auto all = cfg;
  all.checkpoints = "all";
  const auto dir2 = fresh_dir("rep-all");
  CHECK(run_experiment(all, dir2).exit_code == 0);
  const std::string csv2 = slurp(dir2 / "replicate.csv");
  std::size_t rows2 = 0;
  for (char c : csv2) rows2 += (c == '\n');
  CHECK(rows2 == 10 * 3 * 4 + 1);
}

TEST_CASE("strategy-compare and cov-decompose experiments pass on defaults") {
  {
    const auto cfg = parse(
        "experiment=strategy-compare\n"
        "generator.kind=model\n"
        "generator.z_kind=icp\n"
        "ensemble.seeds=3\n"
        "scheme.levels=2\n"
        "scheme.base_intervals=128\n");
    const auto dir = fresh_dir("cmp");
    CHECK(run_experiment(cfg, dir).exit_code == 0);
  }
  {
    const auto cfg = parse(
        "experiment=cov-decompose\n"
        "generator.kind=brownian\n"
        "functional.kind=power:2\n"
        "ensemble.seeds=5\n"
        "scheme.levels=3\n"
        "scheme.base_intervals=128\n");
    const auto dir = fresh_dir("cov");
    const auto r = run_experiment(cfg, dir);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(dir / "cov-decompose.csv");
    std::size_t rows = 0;
    for (char c : csv) rows += (c == '\n');
    CHECK(rows == 5 * 3 * 5 + 1);  // five terms per (seed, level)
  }
}

TEST_CASE("tails experiment recovers the index and fails honestly when asked not to") {
  const auto cfg = parse(
      "experiment=tails\n"
      "generator.alpha=1.5\n"
      "tails.min_jumps=100000\n");
  const auto dir = fresh_dir("tails");
  const auto r = run_experiment(cfg, dir);
  CHECK(r.exit_code == 0);

  // an absurd tolerance flips the exit status to an assertion failure
  auto strict = cfg;
  strict.tail_rel_tol = 1e-9;
  const auto dir2 = fresh_dir("tails-strict");
  const auto r2 = run_experiment(strict, dir2);
  CHECK(r2.exit_code == 1);
  CHECK(r2.summary.find("FAIL") != std::string::npos);
}

TEST_CASE("evaluation failures map to the infrastructure exit code") {
  // pricing a log-average claim on a signed path has to fail, and the
  // failure names the seed rather than passing as an assertion miss
  const auto cfg = parse(
      "experiment=replicate\n"
      "generator.kind=brownian\n"
      "functional.kind=geometric-asian\n"
      "ensemble.seeds=2\n"
      "scheme.levels=2\n"
      "scheme.base_intervals=64\n");
  const auto dir = fresh_dir("exit3");
  const auto r = run_experiment(cfg, dir);
  CHECK(r.exit_code == 3);
  CHECK(r.summary.find("seed") != std::string::npos);
}

TEST_CASE("replicate rerun from manifest is byte-identical") {
  const auto cfg = parse(
      "experiment=replicate\n"
      "generator.kind=model\n"
      "generator.z_kind=sicp\n"
      "generator.alpha=3.0\n"
      "ensemble.seeds=5\n"
      "scheme.levels=2\n"
      "scheme.base_intervals=128\n");
  const auto dir1 = fresh_dir("repro1");
  const auto dir2 = fresh_dir("repro2");
  CHECK(run_experiment(cfg, dir1).exit_code == 0);
  const auto manifest_cfg =
      ExperimentConfig::from_keyvalues(KeyValues::parse_file((dir1 / "manifest").string()));
  CHECK(run_experiment(manifest_cfg, dir2).exit_code == 0);
  CHECK(slurp(dir1 / "replicate.csv") == slurp(dir2 / "replicate.csv"));
  CHECK(slurp(dir1 / "manifest") == slurp(dir2 / "manifest"));
}
