#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>

#include "sgfem/space.hpp"

namespace sgfem {

struct MaterialParams {
  double E = 1.0;
  double nu = 0.3;
  double lambda = 0.0;
  double mu = 0.0;
  double iota = 1.0;

  static MaterialParams from_E_nu(double E, double nu, double iota);
};

/// Raw (pre-BC) blocks of the mixed system:
///   A(v,w)   = 2 mu [ (eps(v),eps(w)) + iota^2 (grad eps(v), grad eps(w)) ]
///   B(v,q)   = (div v, q) + iota^2 (grad div v, grad q)
///   C(s,q)   = (s,q) + iota^2 (grad s, grad q)
///   load(v)  = (f, v)
///   X(v,w)   = (grad v, grad w) + iota^2 (hess v, hess w)   [norm Gram]
struct AssembledBlocks {
  Eigen::SparseMatrix<double> A;  // n_u x n_u
  Eigen::SparseMatrix<double> B;  // n_p x n_u
  Eigen::SparseMatrix<double> C;  // n_p x n_p
  Eigen::SparseMatrix<double> X;  // n_u x n_u (assembled on demand)
  Eigen::VectorXd load;           // n_u
};

using VectorField = std::function<Eigen::Vector2d(double, double)>;

AssembledBlocks assemble_blocks(const Mesh& mesh, const DofMap& dofmap,
                                const ReferenceBasis& ref, const MaterialParams& params,
                                const VectorField& f, int quad_degree = 12,
                                bool with_norm_gram = false);

/// Reduced symmetric saddle system on the free DoFs,
///   [[A, B^T, 0], [B, -C/lambda, w], [0, w^T, 0]] x = rhs,
/// with fixed-DoF contributions lifted to the right-hand side. The mean row
/// w is optional.
struct SaddleSystem {
  Eigen::SparseMatrix<double> K;
  Eigen::VectorXd rhs;
  std::vector<int> u_free;  // displacement DoF ids, reduced order
  std::vector<int> p_free;  // pressure DoF ids, reduced order
  bool has_mean_row = false;
  Eigen::VectorXd u_fixed;  // full-size fixed values (zero at free entries)
  Eigen::VectorXd p_fixed;
  int n_u_total = 0;
  int n_p_total = 0;
};

SaddleSystem build_saddle_system(const AssembledBlocks& blocks, const DofMap& dofmap,
                                 const Mesh& mesh, const MaterialParams& params,
                                 const BcValues& bc, bool mean_constraint);

}  // namespace sgfem
