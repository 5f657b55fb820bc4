#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "sgfem/bary_poly.hpp"
#include "sgfem/quadrature.hpp"

namespace sgfem {

enum class DofKind { VertexValue, EdgeValueMoment, EdgeNormalMoment, InteriorMoment };

struct DofDescriptor {
  DofKind kind;
  int entity = 0;  // vertex or edge index (0..2); unused for interior
  int moment = 0;  // moment index within the entity
};

/// Ordered local DoF set for order r: 3 vertex values, 3*(r-1) edge value
/// moments, 3*(r-1) edge normal moments, dim P_{r-2} interior moments.
/// Total (r^2 + 11r - 6)/2.
std::vector<DofDescriptor> local_dof_set(int r);

/// Bubble span {b_K b_i P_{k,r-2}^{(1,2,2)}(l_i, l_i+, l_i-)}, k = 0..r-2,
/// for edge i (opposite vertex i), cyclic (i, i+1, i+2) orientation.
std::vector<BaryPoly> edge_bubble_basis(int r, int i);

/// Interior bubble span {b_K^2 P_{k,r-2}^{(2,2,2)}}, k = 0..r-2.
std::vector<BaryPoly> interior_bubble_basis(int r);

/// Coefficient (exact rational, to be divided by |grad l_i|) that makes the
/// k-th edge normal moment of coeff * b_K b_i * Q equal 1, where Q is the
/// content-reduced P_{k,r-2}^{(1,2,2)}. Values: -30 (r=2), +30, -70 (r=3).
Rational dual_coefficient_edge(int r, int k);

/// Interior analogue against the content-reduced P_{k,r-2}^{(2,2,2)}:
/// 2520 (r=2), 4200, 12600 (r=3).
Rational dual_coefficient_interior(int r, int k);

/// Full dual edge-bubble shape a_{k,r-2} * b_K b_i * P_{k,r-2}^{(1,2,2)}
/// without the geometric 1/|grad l_i| factor (exact rational coefficients).
BaryPoly edge_dual_shape(int r, int i, int k);
BaryPoly interior_dual_shape(int r, int k);

/// Triangle geometry plus the sign conventions tying local edge DoFs to a
/// global orientation. Defaults describe a standalone element: outward
/// normals, parameter increasing toward vertex i+1 on edge i.
struct TriangleGeometry {
  std::array<Eigen::Vector2d, 3> vertex;
  double area = 0.0;
  std::array<Eigen::Vector2d, 3> grad_lambda;     // constant gradients of l_i
  std::array<double, 3> grad_lambda_norm{};       // |grad l_i|
  std::array<double, 3> edge_length{};            // |e_i|, edge opposite vertex i
  std::array<Eigen::Vector2d, 3> outward_normal;  // unit, edge i
  std::array<double, 3> normal_sign{1, 1, 1};     // dof normal = sign * outward
  std::array<double, 3> param_sign{1, 1, 1};      // dof parameter = sign*(l_{i+1}-l_{i+2})

  static TriangleGeometry from_vertices(const std::array<Eigen::Vector2d, 3>& v);
  Eigen::Vector2d point(double l1, double l2, double l3) const;
  std::array<double, 3> barycentric(const Eigen::Vector2d& x) const;
};

/// Geometry-independent data for order r: the span of P_K (as barycentric
/// polynomials), its formal lambda-derivatives, interior moment weights, and
/// tabulated traces on the three reference edges.
class ReferenceBasis {
 public:
  explicit ReferenceBasis(int r);

  int order() const { return r_; }
  int size() const { return static_cast<int>(span_.size()); }
  const std::vector<BaryPoly>& span() const { return span_; }
  const std::vector<DofDescriptor>& dofs() const { return dofs_; }
  const BaryPoly& span_dl(int j, int a) const { return dl_[static_cast<size_t>(j)][static_cast<size_t>(a)]; }
  const BaryPoly& span_d2l(int j, int a, int b) const;
  /// Interior moment weight polynomial for interior moment index m.
  const BaryPoly& interior_weight(int m) const { return interior_weights_[static_cast<size_t>(m)]; }

  // Edge tabulation: 1D Gauss nodes t_q on [-1,1] mapped onto edge i
  // (parameter +1 at vertex i+1). Values and lambda-gradients of every span
  // member at those points.
  const EdgeRule& edge_rule() const { return edge_rule_; }
  double edge_value(int i, int j, int q) const { return edge_val_[static_cast<size_t>(i)](j, q); }
  double edge_dl(int i, int j, int q, int a) const { return edge_dl_[static_cast<size_t>(i)][static_cast<size_t>(a)](j, q); }
  std::array<double, 3> edge_point(int i, int q) const;

  /// Legendre and (2,2)-Jacobi moment weights evaluated at the edge nodes.
  double legendre_at_node(int k, int q) const { return leg_[static_cast<size_t>(k)](q); }
  double jacobi22_at_node(int k, int q) const { return jac22_[static_cast<size_t>(k)](q); }

  // Geometry-independent DoF-row tables. Vertex and interior rows are the
  // corresponding DoF-matrix rows verbatim; edge rows still need the sign
  // factors and (for normal moments) the contraction with grad l_a . n.
  const Eigen::MatrixXd& vertex_rows() const { return vertex_rows_; }
  const Eigen::MatrixXd& interior_rows() const { return interior_rows_; }
  const Eigen::VectorXd& edge_value_row(int i, int k) const;
  /// (3 x nspan): row a = edge-mean of (d span_j / d l_a) * P_k^{(2,2)}.
  const Eigen::MatrixXd& edge_normal_row(int i, int k) const;

 private:
  int r_;
  std::vector<BaryPoly> span_;
  std::vector<DofDescriptor> dofs_;
  std::vector<std::array<BaryPoly, 3>> dl_;
  std::vector<std::array<BaryPoly, 6>> d2l_;  // aa, ab, ac, bb, bc, cc
  std::vector<BaryPoly> interior_weights_;
  EdgeRule edge_rule_;
  std::array<Eigen::MatrixXd, 3> edge_val_;                 // (span, node)
  std::array<std::array<Eigen::MatrixXd, 3>, 3> edge_dl_;   // [edge][lambda]
  std::vector<Eigen::VectorXd> leg_, jac22_;
  Eigen::MatrixXd vertex_rows_, interior_rows_;
  std::array<std::vector<Eigen::VectorXd>, 3> edge_value_rows_;
  std::array<std::vector<Eigen::MatrixXd>, 3> edge_normal_rows_;
};

/// Exact mean of a barycentric polynomial over any triangle.
Rational mean_over_triangle(const BaryPoly& p);

/// Scale every term to total degree `degree` with powers of (l1+l2+l3).
BaryPoly homogenize(const BaryPoly& p, int degree);

/// Span values and lambda-derivatives tabulated at a triangle rule.
struct SpanTables {
  QuadRule rule;
  Eigen::MatrixXd val;                  // (span, point)
  std::array<Eigen::MatrixXd, 3> dl;    // d/dl_a
  std::array<Eigen::MatrixXd, 6> d2l;   // l1l1, l1l2, l1l3, l2l2, l2l3, l3l3
};
SpanTables tabulate_span(const ReferenceBasis& basis, const QuadRule& rule);

/// A scalar field with gradient, for interpolation and boundary data.
struct ScalarField {
  std::function<double(double, double)> value;
  std::function<Eigen::Vector2d(double, double)> gradient;
};

/// The dual (nodal) basis of (K, P_K, Sigma_K) on one triangle. Built by
/// inverting the DoF-evaluation matrix; the closed-form shape functions act
/// as test oracles only because the normal-moment DoFs carry the
/// geometry-dependent |grad l_i| factor.
class ElementBasis {
 public:
  ElementBasis(const ReferenceBasis& ref, const TriangleGeometry& geom);

  int ndof() const { return ref_->size(); }
  const TriangleGeometry& geometry() const { return geom_; }
  const ReferenceBasis& reference() const { return *ref_; }
  /// dual_i = sum_j coeffs(j,i) * span_j
  const Eigen::MatrixXd& coeffs() const { return coeffs_; }
  double dof_matrix_rcond() const { return rcond_; }

  /// Values / gradients / Hessians of all dual shapes at one barycentric point.
  Eigen::VectorXd values(const std::array<double, 3>& bary) const;
  Eigen::MatrixXd gradients(const std::array<double, 3>& bary) const;          // (ndof, 2)
  Eigen::MatrixXd hessians(const std::array<double, 3>& bary) const;           // (ndof, 3): xx, xy, yy

  /// DoF functionals applied to a smooth field = local interpolation
  /// coefficients of pi_K f.
  Eigen::VectorXd interpolate(const ScalarField& f, int quad_degree = 20) const;

  /// Apply one DoF functional to a smooth field.
  double apply_dof(int i, const ScalarField& f, int quad_degree = 20) const;

 private:
  const ReferenceBasis* ref_;
  TriangleGeometry geom_;
  Eigen::MatrixXd coeffs_;
  double rcond_ = 0.0;
};

/// DoF-evaluation matrix M_{ij} = DoF_i(span_j) for the given geometry.
Eigen::MatrixXd dof_matrix(const ReferenceBasis& ref, const TriangleGeometry& geom);

}  // namespace sgfem
