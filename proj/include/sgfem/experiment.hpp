#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgfem/norms.hpp"

namespace sgfem {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  int example = 1;
  std::vector<double> nus{0.3, 0.4999};
  std::vector<double> iotas{1.0, 1e-6};
  std::vector<int> levels{8, 16, 32, 64};
  double perturb = 0.2;
  unsigned seed = 1;
  std::string format = "markdown";          // "csv" or "markdown"
  std::string out_dir = ".";
  std::string mean_constraint = "auto";     // "on", "off", "auto"
  int quad_degree = 12;
  int error_quad_degree = 20;
  bool export_meshes = false;
};

struct BlockResult {
  double nu = 0.0;
  double iota = 0.0;
  RateTable table;
  std::string table_file;
};

struct ExperimentResult {
  std::vector<BlockResult> blocks;
  std::string manifest_file;
};

/// Runs the full (nu, iota, level) grid for one example: mesh ladder,
/// assembly, solve, relative errors, rates. Writes one table per (nu, iota)
/// block plus a flat key=value manifest into config.out_dir. Progress and
/// warnings go to `log`.
ExperimentResult run_experiment(const RunConfig& config, std::ostream& log);

/// One convergence run (single nu/iota/n), exposed for tests.
struct SingleRun {
  double h = 0.0;
  double min_angle = 0.0;
  double rel_error = 0.0;
  double residual = 0.0;
  double solve_seconds = 0.0;
  int n_dofs = 0;
};
SingleRun run_single(const RunConfig& config, double nu, double iota, int n);

std::string emit_table(const RateTable& table, const std::string& format);

}  // namespace sgfem
