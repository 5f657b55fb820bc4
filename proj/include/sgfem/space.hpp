#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "sgfem/element.hpp"
#include "sgfem/mesh.hpp"

namespace sgfem {

/// Global numbering for the displacement space (per scalar component:
/// vertex values, edge value moments, edge normal moments, interior
/// moments) and the continuous Lagrange pressure space of order r-1.
/// Displacement DoF ids interleave the two components: 2*scalar + c.
struct DofMap {
  int r = 2;
  int nv = 0, ne = 0, nt = 0;
  int n_edge_moments = 0;  // value (and normal) moments per edge = r-1
  int n_interior = 0;      // interior moments per triangle
  int n_scalar = 0;        // per-component displacement DoFs
  int n_u = 0;             // 2 * n_scalar
  int n_p = 0;             // pressure DoFs (all Lagrange nodes)
  std::vector<bool> scalar_boundary;    // size n_scalar
  std::vector<bool> pressure_boundary;  // size n_p

  int vertex_dof(int v) const { return v; }
  int edge_value_dof(int e, int k) const { return nv + e * n_edge_moments + k; }
  int edge_normal_dof(int e, int k) const {
    return nv + (ne + e) * n_edge_moments + k;
  }
  int interior_dof(int t, int m) const {
    return nv + 2 * ne * n_edge_moments + t * n_interior + m;
  }
  int displacement_dof(int scalar, int c) const { return 2 * scalar + c; }

  /// Scalar global ids for the element's local DoFs, in local_dof_set order.
  std::vector<int> cell_dofs(const Mesh& mesh, int t) const;
};

DofMap build_dofmap(const Mesh& mesh, int r);

/// Element geometry with normal/parameter signs fixed by the global edge
/// conventions, so every local DoF functional coincides with the global one.
TriangleGeometry element_geometry(const Mesh& mesh, int t);

/// Essential boundary data: displacement trace, its full gradient (for the
/// normal moments), and the pressure trace. Row c of grad_u is grad u_c.
struct BoundaryData {
  std::function<Eigen::Vector2d(double, double)> u;
  std::function<Eigen::Matrix2d(double, double)> grad_u;
  std::function<double(double, double)> p;

  static BoundaryData homogeneous();
};

/// Fixed-DoF values and masks produced from boundary data; free entries are
/// zero. u is indexed by displacement DoF id, p by pressure DoF id.
struct BcValues {
  Eigen::VectorXd u;
  Eigen::VectorXd p;
  std::vector<bool> u_fixed;
  std::vector<bool> p_fixed;
};

BcValues apply_essential_bcs(const DofMap& dofmap, const Mesh& mesh,
                             const BoundaryData& data, int quad_degree = 20);

/// Vector w with w . p = integral of the P1 pressure field over the domain
/// (exact hat-function integrals), for the mean-zero multiplier row.
Eigen::VectorXd mean_constraint_row(const DofMap& dofmap, const Mesh& mesh);

/// Evaluate one displacement component of a global coefficient vector at a
/// barycentric point of triangle t (test/inspection path; assembly uses
/// tabulated spans).
double evaluate_scalar(const Mesh& mesh, const DofMap& dofmap, const ReferenceBasis& ref,
                       const Eigen::VectorXd& scalar_coeffs, int t,
                       const std::array<double, 3>& bary);

}  // namespace sgfem
