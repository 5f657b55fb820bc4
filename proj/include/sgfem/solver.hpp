#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "sgfem/assembly.hpp"

namespace sgfem {

struct SolveReport {
  double relative_residual = 0.0;
  double wall_time_seconds = 0.0;
  int n_dofs = 0;
};

struct MixedSolution {
  Eigen::VectorXd u;  // full-size displacement coefficients (fixed values included)
  Eigen::VectorXd p;  // full-size pressure coefficients
  double multiplier = 0.0;
  SolveReport report;
};

/// Direct sparse factorization of the reduced saddle system; throws
/// SolveError if the factorization fails or the relative residual exceeds
/// 1e-8.
MixedSolution solve_saddle(const SaddleSystem& system);

/// Discrete inf-sup constant beta_h = sqrt(theta_min) of
/// B X^{-1} B^T q = theta C q on the homogeneous-BC free spaces, by dense
/// generalized eigensolve. Meshes above `max_n_scalar` free displacement
/// DoFs are rejected.
double infsup_probe(const Mesh& mesh, const DofMap& dofmap, const ReferenceBasis& ref,
                    const MaterialParams& params, int max_free_dofs = 2000);

}  // namespace sgfem
