#include "sgfem/solver.hpp"

#include <Eigen/SparseLU>
#include <chrono>

#include "sgfem/errors.hpp"

namespace sgfem {

MixedSolution solve_saddle(const SaddleSystem& system) {
  const auto start = std::chrono::steady_clock::now();
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.analyzePattern(system.K);
  lu.factorize(system.K);
  if (lu.info() != Eigen::Success)
    throw SolveError("solve_saddle: factorization failed (singular or ill-posed system)");
  Eigen::VectorXd x = lu.solve(system.rhs);
  // One step of iterative refinement tightens the residual at negligible cost.
  x += lu.solve(system.rhs - system.K * x);

  // Normwise backward error ||Kx - b|| / (||K|| ||x|| + ||b||).
  const double bnorm = system.rhs.norm();
  const double scale = system.K.norm() * x.norm() + bnorm;
  const double res = (system.K * x - system.rhs).norm() / (scale > 0 ? scale : 1.0);
  if (!(res < 1e-8))
    throw SolveError("solve_saddle: backward error " + std::to_string(res) + " exceeds 1e-8");

  MixedSolution sol;
  sol.u = system.u_fixed;
  sol.p = system.p_fixed;
  const int nuf = static_cast<int>(system.u_free.size());
  for (int i = 0; i < nuf; ++i) sol.u(system.u_free[static_cast<size_t>(i)]) = x(i);
  for (size_t i = 0; i < system.p_free.size(); ++i)
    sol.p(system.p_free[i]) = x(nuf + static_cast<int>(i));
  if (system.has_mean_row) sol.multiplier = x(x.size() - 1);
  sol.report.relative_residual = res;
  sol.report.n_dofs = static_cast<int>(system.K.rows());
  sol.report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

double infsup_probe(const Mesh& mesh, const DofMap& dofmap, const ReferenceBasis& ref,
                    const MaterialParams& params, int max_free_dofs) {
  const VectorField zero = [](double, double) { return Eigen::Vector2d::Zero().eval(); };
  const AssembledBlocks blocks =
      assemble_blocks(mesh, dofmap, ref, params, zero, 12, /*with_norm_gram=*/true);
  const BcValues bc = apply_essential_bcs(dofmap, mesh, BoundaryData::homogeneous());

  std::vector<int> u_free, p_free;
  for (int i = 0; i < dofmap.n_u; ++i)
    if (!bc.u_fixed[static_cast<size_t>(i)]) u_free.push_back(i);
  for (int i = 0; i < dofmap.n_p; ++i)
    if (!bc.p_fixed[static_cast<size_t>(i)]) p_free.push_back(i);
  const int nu = static_cast<int>(u_free.size());
  const int np = static_cast<int>(p_free.size());
  if (nu > max_free_dofs)
    throw CapabilityError("infsup_probe: mesh too large for the dense eigensolve");
  if (np == 0) throw ParameterError("infsup_probe: empty pressure space");

  Eigen::MatrixXd X(nu, nu), B(np, nu), C(np, np);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      X(i, j) = blocks.X.coeff(u_free[static_cast<size_t>(i)], u_free[static_cast<size_t>(j)]);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nu; ++j)
      B(i, j) = blocks.B.coeff(p_free[static_cast<size_t>(i)], u_free[static_cast<size_t>(j)]);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      C(i, j) = blocks.C.coeff(p_free[static_cast<size_t>(i)], p_free[static_cast<size_t>(j)]);

  const Eigen::LLT<Eigen::MatrixXd> llt(X);
  if (llt.info() != Eigen::Success)
    throw SolveError("infsup_probe: displacement Gram matrix not positive definite");
  const Eigen::MatrixXd S = B * llt.solve(B.transpose());

  // Restrict q off the mean constraint kernel: the pressure space is
  // mean-zero, so the probe minimizes over {q : w.q = 0} with w the mean
  // integral weights. Z spans that complement (last np-1 columns of the
  // Householder Q of w).
  Eigen::MatrixXd Z = Eigen::MatrixXd::Identity(np, np);
  if (np > 1) {
    Eigen::VectorXd w_free(np);
    const Eigen::VectorXd w_full = mean_constraint_row(dofmap, mesh);
    for (int i = 0; i < np; ++i) w_free(i) = w_full(p_free[static_cast<size_t>(i)]);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(w_free);
    const Eigen::MatrixXd Q = qr.householderQ();
    Z = Q.rightCols(np - 1);
  }

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(
      Z.transpose() * S * Z, Z.transpose() * C * Z);
  if (es.info() != Eigen::Success) throw SolveError("infsup_probe: eigensolve failed");
  const double theta = es.eigenvalues()(0);
  if (!(theta > 0)) throw SolveError("infsup_probe: nonpositive smallest eigenvalue");
  return std::sqrt(theta);
}

}  // namespace sgfem
