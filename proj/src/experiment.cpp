#include "sgfem/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sgfem/errors.hpp"
#include "sgfem/solver.hpp"

namespace sgfem {

namespace {

bool use_mean_constraint(const RunConfig& config) {
  if (config.mean_constraint == "on") return true;
  if (config.mean_constraint == "off") return false;
  if (config.mean_constraint == "auto") return config.example != 2;
  throw ParameterError("mean_constraint must be on, off, or auto");
}

BoundaryData boundary_data_for(const ExactSolution& exact) {
  if (exact.homogeneous_bc) return BoundaryData::homogeneous();
  BoundaryData bd;
  bd.u = exact.u;
  bd.grad_u = exact.grad_u;
  bd.p = exact.p;
  return bd;
}

std::string format_param(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

SingleRun run_single(const RunConfig& config, double nu, double iota, int n) {
  const MaterialParams params = MaterialParams::from_E_nu(1.0, nu, iota);
  const ExactSolution exact = example_solution(config.example, params);
  const Mesh mesh = unit_square_mesh(n, config.perturb, config.seed);
  const ReferenceBasis ref(2);
  const DofMap dofmap = build_dofmap(mesh, 2);
  const AssembledBlocks blocks =
      assemble_blocks(mesh, dofmap, ref, params, exact.f, config.quad_degree);
  const BcValues bc = apply_essential_bcs(dofmap, mesh, boundary_data_for(exact));
  const SaddleSystem sys =
      build_saddle_system(blocks, dofmap, mesh, params, bc, use_mean_constraint(config));
  const MixedSolution sol = solve_saddle(sys);

  SingleRun run;
  run.h = mesh.max_diameter;
  run.min_angle = mesh.min_angle;
  run.rel_error = relative_error(mesh, dofmap, ref, sol.u, exact, iota,
                                 config.error_quad_degree);
  run.residual = sol.report.relative_residual;
  run.solve_seconds = sol.report.wall_time_seconds;
  run.n_dofs = sol.report.n_dofs;
  return run;
}

std::string emit_table(const RateTable& table, const std::string& format) {
  std::ostringstream out;
  if (format == "csv") {
    out << "iota,h,rel_error,rate\n";
    for (const auto& r : table.rows) {
      out << std::setprecision(10) << r.iota << "," << r.h << ","
          << std::scientific << std::setprecision(3) << r.rel_error << ",";
      out << std::defaultfloat << std::setprecision(10);
      if (r.rate) out << std::fixed << std::setprecision(2) << *r.rate;
      out << std::defaultfloat << std::setprecision(10) << "\n";
    }
    return out.str();
  }
  if (format == "markdown") {
    out << "| iota | h | rel. error | rate |\n|---|---|---|---|\n";
    for (const auto& r : table.rows) {
      out << "| " << std::defaultfloat << std::setprecision(6) << r.iota << " | " << r.h
          << " | " << std::scientific << std::setprecision(3) << r.rel_error << " | ";
      if (r.rate)
        out << std::fixed << std::setprecision(2) << *r.rate;
      else
        out << "-";
      out << std::defaultfloat << std::setprecision(6) << " |\n";
    }
    return out.str();
  }
  throw ParameterError("emit_table: format must be csv or markdown");
}

ExperimentResult run_experiment(const RunConfig& config, std::ostream& log) {
  namespace fs = std::filesystem;
  if (config.example < 1 || config.example > 3)
    throw ParameterError("run_experiment: example must be 1, 2, or 3");
  if (config.format != "csv" && config.format != "markdown")
    throw ParameterError("run_experiment: format must be csv or markdown");
  use_mean_constraint(config);  // validate before the (long) runs start
  fs::create_directories(config.out_dir);

  ExperimentResult result;
  std::ostringstream manifest;
  manifest << "version=" << kVersion << "\n";
  manifest << "example=" << config.example << "\n";
  manifest << "perturb=" << config.perturb << "\n";
  manifest << "seed=" << config.seed << "\n";
  manifest << "format=" << config.format << "\n";
  manifest << "mean_constraint=" << config.mean_constraint << "\n";
  manifest << "quad_degree=" << config.quad_degree << "\n";
  manifest << "error_quad_degree=" << config.error_quad_degree << "\n";

  const std::string ext = config.format == "csv" ? "csv" : "md";
  int run_index = 0;
  for (const double nu : config.nus) {
    const MaterialParams mat0 = MaterialParams::from_E_nu(1.0, nu, 1.0);
    log << "nu=" << nu << ": lambda=" << std::scientific << std::setprecision(4)
        << mat0.lambda << ", mu=" << mat0.mu << std::defaultfloat << "\n";
    for (const double iota : config.iotas) {
      std::vector<double> hs, errors;
      for (const int n : config.levels) {
        if (config.example == 3 && iota > 0.1 / n)
          log << "warning: example 3 expects iota << h; iota=" << iota << " exceeds h/10 at n="
              << n << "\n";
        SingleRun run;
        try {
          run = run_single(config, nu, iota, n);
        } catch (const std::exception& e) {
          throw SolveError("run failed at nu=" + format_param(nu) + " iota=" +
                           format_param(iota) + " n=" + format_param(n) + ": " + e.what());
        }
        if (config.export_meshes) {
          const Mesh mesh = unit_square_mesh(n, config.perturb, config.seed);
          std::ofstream mf(fs::path(config.out_dir) /
                           ("mesh_n" + std::to_string(n) + ".txt"));
          mf << export_mesh(mesh);
        }
        hs.push_back(run.h);
        errors.push_back(run.rel_error);
        const std::string prefix = "run" + std::to_string(run_index) + ".";
        manifest << prefix << "nu=" << nu << "\n";
        manifest << prefix << "iota=" << iota << "\n";
        manifest << prefix << "n=" << n << "\n";
        manifest << prefix << "h=" << run.h << "\n";
        manifest << prefix << "min_angle=" << run.min_angle << "\n";
        manifest << prefix << "n_dofs=" << run.n_dofs << "\n";
        manifest << prefix << "residual=" << run.residual << "\n";
        manifest << prefix << "solve_seconds=" << run.solve_seconds << "\n";
        manifest << prefix << "rel_error=" << std::scientific << std::setprecision(6)
                 << run.rel_error << std::defaultfloat << "\n";
        ++run_index;
        log << "  iota=" << iota << " n=" << n << " error=" << std::scientific
            << std::setprecision(3) << run.rel_error << std::defaultfloat << "\n";
      }
      BlockResult block;
      block.nu = nu;
      block.iota = iota;
      block.table = rate_table(hs, errors, iota);
      std::ostringstream name;
      name << "example" << config.example << "_nu" << nu << "_iota" << iota << "." << ext;
      block.table_file = (fs::path(config.out_dir) / name.str()).string();
      std::ofstream tf(block.table_file);
      tf << emit_table(block.table, config.format);
      manifest << "table." << result.blocks.size() << "=" << block.table_file << "\n";
      result.blocks.push_back(std::move(block));
    }
  }
  result.manifest_file = (fs::path(config.out_dir) / "manifest.txt").string();
  std::ofstream mf(result.manifest_file);
  mf << manifest.str();
  return result;
}

}  // namespace sgfem
