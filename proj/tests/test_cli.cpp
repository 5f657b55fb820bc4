#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sgfem/errors.hpp"
#include "sgfem/experiment.hpp"

using namespace sgfem;

namespace {

RateTable sample_table() {
  return rate_table({0.25, 0.125, 0.0625}, {1.2e-1, 3.1e-2, 7.9e-3}, 1e-6);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("CSV table emission round-trips") {
  const std::string csv = emit_table(sample_table(), "csv");
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "iota,h,rel_error,rate");
  int rows = 0, with_rate = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    std::istringstream ls(line);
    std::string iota_s, h_s, err_s, rate_s;
    std::getline(ls, iota_s, ',');
    std::getline(ls, h_s, ',');
    std::getline(ls, err_s, ',');
    std::getline(ls, rate_s, ',');
    CHECK(std::stod(iota_s) == doctest::Approx(1e-6));
    CHECK(std::stod(err_s) > 0.0);
    if (!rate_s.empty()) {
      ++with_rate;
      CHECK(std::stod(rate_s) == doctest::Approx(1.96).epsilon(0.02));
    }
  }
  CHECK(rows == 3);
  CHECK(with_rate == 2);
}

TEST_CASE("markdown table emission") {
  const std::string md = emit_table(sample_table(), "markdown");
  std::istringstream in(md);
  std::string line;
  int data_rows = 0, dashes = 0;
  while (std::getline(in, line)) {
    if (line.find("---") != std::string::npos) ++dashes;
    else if (line.find("e-0") != std::string::npos || line.find("e-1") != std::string::npos)
      ++data_rows;
  }
  CHECK(dashes == 1);
  CHECK(data_rows == 3);
  // The first data row has no rate: a "-" placeholder appears.
  CHECK(md.find(" - ") != std::string::npos);
}

TEST_CASE("single-row table has no rate column entries") {
  const RateTable one = rate_table({0.25}, {1.0e-2}, 1.0);
  REQUIRE(one.rows.size() == 1);
  CHECK_FALSE(one.rows[0].rate.has_value());
  const std::string csv = emit_table(one, "csv");
  CHECK(csv.find("1.0") != std::string::npos);
}

TEST_CASE("single run is deterministic") {
  RunConfig cfg;
  cfg.example = 1;
  const SingleRun a = run_single(cfg, 0.3, 1e-2, 4);
  const SingleRun b = run_single(cfg, 0.3, 1e-2, 4);
  CHECK(a.rel_error == b.rel_error);
  CHECK(a.h == b.h);
  CHECK(a.n_dofs == b.n_dofs);
  CHECK(a.rel_error > 0.0);
  CHECK(a.residual < 1e-8);
}

TEST_CASE("experiment writes tables and a manifest") {
  RunConfig cfg;
  cfg.example = 1;
  cfg.nus = {0.3};
  cfg.iotas = {1e-2};
  cfg.levels = {2, 4};
  cfg.format = "csv";
  cfg.out_dir = (std::filesystem::temp_directory_path() / "sgfem_cli_test").string();
  std::filesystem::create_directories(cfg.out_dir);
  std::ostringstream log;
  const ExperimentResult res = run_experiment(cfg, log);
  REQUIRE(res.blocks.size() == 1);
  CHECK(res.blocks[0].table.rows.size() == 2);
  CHECK(std::filesystem::exists(res.blocks[0].table_file));
  REQUIRE(std::filesystem::exists(res.manifest_file));

  const std::string manifest = slurp(res.manifest_file);
  for (const char* key : {"version=", "example=1", "run0.n=2", "run1.n=4", "run0.rel_error=",
                          "run0.n_dofs=", "table.0="}) {
    INFO(key);
    CHECK(manifest.find(key) != std::string::npos);
  }
  // Derived moduli are logged.
  CHECK(log.str().find("lambda=") != std::string::npos);
  CHECK(log.str().find("mu=") != std::string::npos);
  std::filesystem::remove_all(cfg.out_dir);
}

TEST_CASE("invalid configuration is rejected") {
  RunConfig cfg;
  cfg.example = 7;
  std::ostringstream log;
  CHECK_THROWS_AS(run_experiment(cfg, log), ParameterError);
  RunConfig bad_fmt;
  bad_fmt.format = "yaml";
  CHECK_THROWS_AS(run_experiment(bad_fmt, log), ParameterError);
}
