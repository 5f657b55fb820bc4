#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgfem/assembly.hpp"

namespace sgfem {

/// Exact (or reference) solution fields. grad_u row c is grad u_c; hess_u
/// row c holds (u_c)_xx, (u_c)_xy, (u_c)_yy.
struct ExactSolution {
  std::function<Eigen::Vector2d(double, double)> u;
  std::function<Eigen::Matrix2d(double, double)> grad_u;
  std::function<Eigen::Matrix<double, 2, 3>(double, double)> hess_u;
  std::function<double(double, double)> div_u;
  std::function<double(double, double)> p;  // lambda * div u
  std::function<Eigen::Vector2d(double, double)> f;
  bool singular = false;
  Eigen::Vector2d singular_point{0.0, 0.0};
  bool homogeneous_bc = true;
};

/// The paper's three test problems (example in {1,2,3}); example 3 returns
/// the limit field u0 with f = -mu * laplace(u0).
ExactSolution example_solution(int example, const MaterialParams& params);

/// Weighted broken norm ||grad v||_{iota,h} = ||grad v||_L2
/// + iota * || elementwise hess v ||_L2 (sum, not root-sum-square) of a
/// discrete displacement field given by full-size coefficients.
double weighted_broken_norm(const Mesh& mesh, const DofMap& dofmap, const ReferenceBasis& ref,
                            const Eigen::VectorXd& u_coeffs, double iota,
                            int quad_degree = 20);

/// Relative error ||grad(u - u_h)||_{iota,h} / (||grad u|| + iota ||hess u||).
/// Singular solutions get 4 levels of dyadic corner grading on elements
/// touching the singular point.
double relative_error(const Mesh& mesh, const DofMap& dofmap, const ReferenceBasis& ref,
                      const Eigen::VectorXd& u_coeffs, const ExactSolution& exact,
                      double iota, int quad_degree = 20, int grading_levels = 4);

struct RateRow {
  double iota = 0.0;
  double h = 0.0;
  double rel_error = 0.0;
  std::optional<double> rate;  // log2(e_{coarser}/e_this); absent on first row
};

struct RateTable {
  std::vector<RateRow> rows;
};

/// rate_i = log2(e_{i-1}/e_i); undefined rates (first row, zero error) stay
/// empty.
RateTable rate_table(const std::vector<double>& hs, const std::vector<double>& errors,
                     double iota);

}  // namespace sgfem
