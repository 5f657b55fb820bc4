#include "sgfem/element.hpp"

#include <cmath>

#include "sgfem/errors.hpp"
#include "sgfem/jacobi.hpp"

namespace sgfem {

namespace {

constexpr std::array<int, 3> kNext{1, 2, 0};
constexpr std::array<int, 3> kPrev{2, 0, 1};

void check_order(int r) {
  if (r < 2 || r > 3) throw CapabilityError("element order must be 2 or 3");
}

/// Substitute (l1,l2,l3) -> (l_i, l_{i+1}, l_{i+2}).
BaryPoly permute_to_edge(const BaryPoly& p, int i) {
  const int map[3] = {i, kNext[static_cast<size_t>(i)], kPrev[static_cast<size_t>(i)]};
  BaryPoly r;
  for (const auto& [e, c] : p.terms()) {
    BaryPoly::Exponent pe{0, 0, 0};
    for (int a = 0; a < 3; ++a) pe[static_cast<size_t>(map[a])] = e[static_cast<size_t>(a)];
    r.add_term(pe, c);
  }
  return r;
}

/// Raw coefficient a_{k,r-2} (geometric 1/|grad l_i| factor excluded) making
/// the k-th edge normal moment of a * b_K b_i * P_{k,r-2}^{(1,2,2)} equal 1.
Rational raw_edge_coefficient(int r, int k) {
  const UniPoly p = jacobi_1d(r - 2 - k, 2 * k + 5, 1);
  const Rational at_minus_one = p.eval_rational(-1);
  return Rational(-32) / (at_minus_one * jacobi_norm_1d(k, 2, 2));
}

int d2_index(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 0) return b;            // 00, 01, 02
  if (a == 1) return 2 + b;        // 11 -> 3, 12 -> 4
  return 5;                        // 22
}

}  // namespace

Rational mean_over_triangle(const BaryPoly& p) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    s += c * Rational(2 * factorial(e[0]) * factorial(e[1]) * factorial(e[2]),
                      factorial(e[0] + e[1] + e[2] + 2));
  }
  return s;
}

BaryPoly homogenize(const BaryPoly& p, int degree) {
  const BaryPoly sum = BaryPoly::lambda(0) + BaryPoly::lambda(1) + BaryPoly::lambda(2);
  BaryPoly r;
  for (const auto& [e, c] : p.terms()) {
    const int d = e[0] + e[1] + e[2];
    if (d > degree) throw ParameterError("homogenize: term degree exceeds target");
    BaryPoly mono;
    mono.add_term(e, c);
    r = r + mono * sum.pow(degree - d);
  }
  return r;
}

std::vector<DofDescriptor> local_dof_set(int r) {
  check_order(r);
  std::vector<DofDescriptor> dofs;
  for (int v = 0; v < 3; ++v) dofs.push_back({DofKind::VertexValue, v, 0});
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k <= r - 2; ++k) dofs.push_back({DofKind::EdgeValueMoment, i, k});
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k <= r - 2; ++k) dofs.push_back({DofKind::EdgeNormalMoment, i, k});
  int m = 0;
  for (int n = 0; n <= r - 3; ++n)
    for (int k = 0; k <= n; ++k) dofs.push_back({DofKind::InteriorMoment, 0, m++});
  for (int k = 0; k <= r - 2; ++k) dofs.push_back({DofKind::InteriorMoment, 0, m++});
  return dofs;
}

std::vector<BaryPoly> edge_bubble_basis(int r, int i) {
  check_order(r);
  if (i < 0 || i > 2) throw ParameterError("edge_bubble_basis: edge index out of range");
  std::vector<BaryPoly> basis;
  const BaryPoly factor = BaryPoly::bubble() * BaryPoly::edge_bubble(i);
  for (int k = 0; k <= r - 2; ++k)
    basis.push_back(factor * permute_to_edge(jacobi_tri(k, r - 2, 1, 2, 2), i));
  return basis;
}

std::vector<BaryPoly> interior_bubble_basis(int r) {
  check_order(r);
  std::vector<BaryPoly> basis;
  const BaryPoly b2 = BaryPoly::bubble().pow(2);
  for (int k = 0; k <= r - 2; ++k) basis.push_back(b2 * jacobi_tri(k, r - 2, 2, 2, 2));
  return basis;
}

Rational dual_coefficient_edge(int r, int k) {
  check_order(r);
  if (k < 0 || k > r - 2) throw ParameterError("dual_coefficient_edge: moment out of range");
  const BaryPoly p = jacobi_tri(k, r - 2, 1, 2, 2);
  return raw_edge_coefficient(r, k) * homogenize(p, r - 2).content();
}

Rational dual_coefficient_interior(int r, int k) {
  check_order(r);
  if (k < 0 || k > r - 2) throw ParameterError("dual_coefficient_interior: moment out of range");
  const BaryPoly p = jacobi_tri(k, r - 2, 2, 2, 2);
  const Rational a = Rational(1) / (2 * jacobi_norm_tri(k, r - 2, 2, 2, 2));
  return a * homogenize(p, r - 2).content();
}

BaryPoly edge_dual_shape(int r, int i, int k) {
  check_order(r);
  if (i < 0 || i > 2 || k < 0 || k > r - 2)
    throw ParameterError("edge_dual_shape: index out of range");
  const BaryPoly p = permute_to_edge(jacobi_tri(k, r - 2, 1, 2, 2), i);
  return BaryPoly::bubble() * BaryPoly::edge_bubble(i) * p * raw_edge_coefficient(r, k);
}

BaryPoly interior_dual_shape(int r, int k) {
  check_order(r);
  if (k < 0 || k > r - 2) throw ParameterError("interior_dual_shape: index out of range");
  const Rational a = Rational(1) / (2 * jacobi_norm_tri(k, r - 2, 2, 2, 2));
  return BaryPoly::bubble().pow(2) * jacobi_tri(k, r - 2, 2, 2, 2) * a;
}

TriangleGeometry TriangleGeometry::from_vertices(const std::array<Eigen::Vector2d, 3>& v) {
  TriangleGeometry g;
  g.vertex = v;
  const Eigen::Vector2d d1 = v[1] - v[0];
  const Eigen::Vector2d d2 = v[2] - v[0];
  g.area = 0.5 * (d1.x() * d2.y() - d1.y() * d2.x());
  if (!(g.area > 0.0))
    throw ParameterError("TriangleGeometry: vertices must be counterclockwise and non-degenerate");
  for (int i = 0; i < 3; ++i) {
    const auto& a = v[static_cast<size_t>(kNext[static_cast<size_t>(i)])];
    const auto& b = v[static_cast<size_t>(kPrev[static_cast<size_t>(i)])];
    const Eigen::Vector2d t = b - a;  // edge i runs vertex i+1 -> i+2
    g.edge_length[static_cast<size_t>(i)] = t.norm();
    g.grad_lambda[static_cast<size_t>(i)] = Eigen::Vector2d(-t.y(), t.x()) / (2.0 * g.area);
    g.grad_lambda_norm[static_cast<size_t>(i)] = g.grad_lambda[static_cast<size_t>(i)].norm();
    g.outward_normal[static_cast<size_t>(i)] =
        -g.grad_lambda[static_cast<size_t>(i)] / g.grad_lambda_norm[static_cast<size_t>(i)];
  }
  return g;
}

Eigen::Vector2d TriangleGeometry::point(double l1, double l2, double l3) const {
  return l1 * vertex[0] + l2 * vertex[1] + l3 * vertex[2];
}

std::array<double, 3> TriangleGeometry::barycentric(const Eigen::Vector2d& x) const {
  const Eigen::Vector2d c = (vertex[0] + vertex[1] + vertex[2]) / 3.0;
  std::array<double, 3> l;
  for (int i = 0; i < 3; ++i)
    l[static_cast<size_t>(i)] = 1.0 / 3.0 + grad_lambda[static_cast<size_t>(i)].dot(x - c);
  return l;
}

ReferenceBasis::ReferenceBasis(int r) : r_(r) {
  check_order(r);
  dofs_ = local_dof_set(r);

  // Span: complete P_r as triangle Jacobi polynomials, then the bubbles.
  for (int n = 0; n <= r; ++n)
    for (int k = 0; k <= n; ++k) span_.push_back(jacobi_tri(k, n, 0, 0, 0));
  for (int i = 0; i < 3; ++i)
    for (auto& b : edge_bubble_basis(r, i)) span_.push_back(std::move(b));
  for (auto& b : interior_bubble_basis(r)) span_.push_back(std::move(b));
  const int nspan = size();
  if (nspan != static_cast<int>(dofs_.size()))
    throw UnisolvenceError("ReferenceBasis: span and DoF counts disagree");

  for (const auto& p : span_) {
    std::array<BaryPoly, 3> d;
    for (int a = 0; a < 3; ++a) d[static_cast<size_t>(a)] = p.derivative(a);
    std::array<BaryPoly, 6> d2;
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b)
        d2[static_cast<size_t>(d2_index(a, b))] = d[static_cast<size_t>(a)].derivative(b);
    dl_.push_back(std::move(d));
    d2l_.push_back(std::move(d2));
  }

  // Interior moment weights: mean-value bands below degree r-2, then the
  // (2,2,2) band at degree r-2.
  for (int n = 0; n <= r - 3; ++n)
    for (int k = 0; k <= n; ++k) interior_weights_.push_back(jacobi_tri(k, n, 0, 0, 0));
  for (int k = 0; k <= r - 2; ++k) interior_weights_.push_back(jacobi_tri(k, r - 2, 2, 2, 2));

  // Edge tabulation at Gauss nodes exact for the edge DoF integrands.
  edge_rule_ = edge_quadrature(2 * r + 10);
  const int nq = static_cast<int>(edge_rule_.size());
  for (int i = 0; i < 3; ++i) {
    edge_val_[static_cast<size_t>(i)].resize(nspan, nq);
    for (int a = 0; a < 3; ++a) edge_dl_[static_cast<size_t>(i)][static_cast<size_t>(a)].resize(nspan, nq);
    for (int q = 0; q < nq; ++q) {
      const auto l = edge_point(i, q);
      for (int j = 0; j < nspan; ++j) {
        edge_val_[static_cast<size_t>(i)](j, q) = span_[static_cast<size_t>(j)].eval(l[0], l[1], l[2]);
        for (int a = 0; a < 3; ++a)
          edge_dl_[static_cast<size_t>(i)][static_cast<size_t>(a)](j, q) =
              dl_[static_cast<size_t>(j)][static_cast<size_t>(a)].eval(l[0], l[1], l[2]);
      }
    }
  }
  for (int k = 0; k <= r - 2; ++k) {
    const UniPoly leg = jacobi_1d(k, 0, 0);
    const UniPoly jac = jacobi_1d(k, 2, 2);
    Eigen::VectorXd lv(nq), jv(nq);
    for (int q = 0; q < nq; ++q) {
      lv(q) = leg.eval(edge_rule_.nodes[static_cast<size_t>(q)]);
      jv(q) = jac.eval(edge_rule_.nodes[static_cast<size_t>(q)]);
    }
    leg_.push_back(std::move(lv));
    jac22_.push_back(std::move(jv));
  }

  // Geometry-independent DoF rows.
  vertex_rows_.resize(3, nspan);
  for (int v = 0; v < 3; ++v) {
    const double l[3] = {v == 0 ? 1.0 : 0.0, v == 1 ? 1.0 : 0.0, v == 2 ? 1.0 : 0.0};
    for (int j = 0; j < nspan; ++j)
      vertex_rows_(v, j) = span_[static_cast<size_t>(j)].eval(l[0], l[1], l[2]);
  }
  const int nint = static_cast<int>(interior_weights_.size());
  interior_rows_.resize(nint, nspan);
  for (int m = 0; m < nint; ++m)
    for (int j = 0; j < nspan; ++j)
      interior_rows_(m, j) =
          to_double(mean_over_triangle(span_[static_cast<size_t>(j)] * interior_weights_[static_cast<size_t>(m)]));

  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k <= r - 2; ++k) {
      Eigen::VectorXd vrow = Eigen::VectorXd::Zero(nspan);
      Eigen::MatrixXd nrow = Eigen::MatrixXd::Zero(3, nspan);
      for (int q = 0; q < nq; ++q) {
        const double w = 0.5 * edge_rule_.weights[static_cast<size_t>(q)];
        for (int j = 0; j < nspan; ++j) {
          vrow(j) += w * edge_val_[static_cast<size_t>(i)](j, q) * leg_[static_cast<size_t>(k)](q);
          for (int a = 0; a < 3; ++a)
            nrow(a, j) += w * edge_dl_[static_cast<size_t>(i)][static_cast<size_t>(a)](j, q) *
                          jac22_[static_cast<size_t>(k)](q);
        }
      }
      edge_value_rows_[static_cast<size_t>(i)].push_back(std::move(vrow));
      edge_normal_rows_[static_cast<size_t>(i)].push_back(std::move(nrow));
    }
  }
}

const BaryPoly& ReferenceBasis::span_d2l(int j, int a, int b) const {
  return d2l_[static_cast<size_t>(j)][static_cast<size_t>(d2_index(a, b))];
}

std::array<double, 3> ReferenceBasis::edge_point(int i, int q) const {
  const double t = edge_rule_.nodes[static_cast<size_t>(q)];
  std::array<double, 3> l{0.0, 0.0, 0.0};
  l[static_cast<size_t>(i)] = 0.0;
  l[static_cast<size_t>(kNext[static_cast<size_t>(i)])] = 0.5 * (1.0 + t);
  l[static_cast<size_t>(kPrev[static_cast<size_t>(i)])] = 0.5 * (1.0 - t);
  return l;
}

const Eigen::VectorXd& ReferenceBasis::edge_value_row(int i, int k) const {
  return edge_value_rows_[static_cast<size_t>(i)][static_cast<size_t>(k)];
}

const Eigen::MatrixXd& ReferenceBasis::edge_normal_row(int i, int k) const {
  return edge_normal_rows_[static_cast<size_t>(i)][static_cast<size_t>(k)];
}

SpanTables tabulate_span(const ReferenceBasis& basis, const QuadRule& rule) {
  SpanTables t;
  t.rule = rule;
  const int nspan = basis.size();
  const int nq = static_cast<int>(rule.size());
  t.val.resize(nspan, nq);
  for (auto& m : t.dl) m.resize(nspan, nq);
  for (auto& m : t.d2l) m.resize(nspan, nq);
  for (int q = 0; q < nq; ++q) {
    const auto& l = rule.points[static_cast<size_t>(q)];
    for (int j = 0; j < nspan; ++j) {
      t.val(j, q) = basis.span()[static_cast<size_t>(j)].eval(l[0], l[1], l[2]);
      for (int a = 0; a < 3; ++a)
        t.dl[static_cast<size_t>(a)](j, q) = basis.span_dl(j, a).eval(l[0], l[1], l[2]);
      int idx = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b)
          t.d2l[static_cast<size_t>(idx++)](j, q) = basis.span_d2l(j, a, b).eval(l[0], l[1], l[2]);
    }
  }
  return t;
}

Eigen::MatrixXd dof_matrix(const ReferenceBasis& ref, const TriangleGeometry& geom) {
  const int n = ref.size();
  const int r = ref.order();
  Eigen::MatrixXd M(n, n);
  int row = 0;
  M.topRows(3) = ref.vertex_rows();
  row += 3;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k <= r - 2; ++k) {
      const double sgn = (k % 2 == 0) ? 1.0 : geom.param_sign[static_cast<size_t>(i)];
      M.row(row++) = sgn * ref.edge_value_row(i, k).transpose();
    }
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector2d nrm =
        geom.normal_sign[static_cast<size_t>(i)] * geom.outward_normal[static_cast<size_t>(i)];
    Eigen::Vector3d contract;
    for (int a = 0; a < 3; ++a) contract(a) = geom.grad_lambda[static_cast<size_t>(a)].dot(nrm);
    for (int k = 0; k <= r - 2; ++k) {
      const double sgn = (k % 2 == 0) ? 1.0 : geom.param_sign[static_cast<size_t>(i)];
      M.row(row++) = sgn * (contract.transpose() * ref.edge_normal_row(i, k));
    }
  }
  M.bottomRows(ref.interior_rows().rows()) = ref.interior_rows();
  row += static_cast<int>(ref.interior_rows().rows());
  if (row != n) throw UnisolvenceError("dof_matrix: row count mismatch");
  return M;
}

ElementBasis::ElementBasis(const ReferenceBasis& ref, const TriangleGeometry& geom)
    : ref_(&ref), geom_(geom) {
  const Eigen::MatrixXd M = dof_matrix(ref, geom);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  rcond_ = sv(sv.size() - 1) / sv(0);
  if (!(rcond_ > 1e-12))
    throw UnisolvenceError("ElementBasis: DoF matrix is numerically singular");
  coeffs_ = svd.solve(Eigen::MatrixXd::Identity(M.rows(), M.cols()));
}

Eigen::VectorXd ElementBasis::values(const std::array<double, 3>& bary) const {
  const int n = ndof();
  Eigen::VectorXd s(n);
  for (int j = 0; j < n; ++j)
    s(j) = ref_->span()[static_cast<size_t>(j)].eval(bary[0], bary[1], bary[2]);
  return coeffs_.transpose() * s;
}

Eigen::MatrixXd ElementBasis::gradients(const std::array<double, 3>& bary) const {
  const int n = ndof();
  Eigen::MatrixXd dl(n, 3);
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < 3; ++a)
      dl(j, a) = ref_->span_dl(j, a).eval(bary[0], bary[1], bary[2]);
  Eigen::MatrixXd gl(3, 2);
  for (int a = 0; a < 3; ++a) gl.row(a) = geom_.grad_lambda[static_cast<size_t>(a)].transpose();
  return coeffs_.transpose() * dl * gl;
}

Eigen::MatrixXd ElementBasis::hessians(const std::array<double, 3>& bary) const {
  const int n = ndof();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Eigen::Vector2d& ga = geom_.grad_lambda[static_cast<size_t>(a)];
      const Eigen::Vector2d& gb = geom_.grad_lambda[static_cast<size_t>(b)];
      Eigen::VectorXd d2(n);
      for (int j = 0; j < n; ++j)
        d2(j) = ref_->span_d2l(j, a, b).eval(bary[0], bary[1], bary[2]);
      h.col(0) += d2 * (ga.x() * gb.x());
      h.col(1) += d2 * (ga.x() * gb.y());
      h.col(2) += d2 * (ga.y() * gb.y());
    }
  return coeffs_.transpose() * h;
}

double ElementBasis::apply_dof(int i, const ScalarField& f, int quad_degree) const {
  const auto& dof = ref_->dofs()[static_cast<size_t>(i)];
  const int r = ref_->order();
  switch (dof.kind) {
    case DofKind::VertexValue: {
      const auto& p = geom_.vertex[static_cast<size_t>(dof.entity)];
      return f.value(p.x(), p.y());
    }
    case DofKind::EdgeValueMoment:
    case DofKind::EdgeNormalMoment: {
      const int e = dof.entity;
      const int k = dof.moment;
      const EdgeRule rule = edge_quadrature(quad_degree);
      const UniPoly weight = dof.kind == DofKind::EdgeValueMoment ? jacobi_1d(k, 0, 0)
                                                                  : jacobi_1d(k, 2, 2);
      const double s = geom_.param_sign[static_cast<size_t>(e)];
      const Eigen::Vector2d nrm = geom_.normal_sign[static_cast<size_t>(e)] *
                                  geom_.outward_normal[static_cast<size_t>(e)];
      double acc = 0.0;
      for (size_t q = 0; q < rule.size(); ++q) {
        const double t = rule.nodes[q];
        std::array<double, 3> l{0, 0, 0};
        l[static_cast<size_t>(kNext[static_cast<size_t>(e)])] = 0.5 * (1 + t);
        l[static_cast<size_t>(kPrev[static_cast<size_t>(e)])] = 0.5 * (1 - t);
        const Eigen::Vector2d x = geom_.point(l[0], l[1], l[2]);
        const double g = dof.kind == DofKind::EdgeValueMoment
                             ? f.value(x.x(), x.y())
                             : f.gradient(x.x(), x.y()).dot(nrm);
        acc += 0.5 * rule.weights[q] * g * weight.eval(s * t);
      }
      return acc;
    }
    case DofKind::InteriorMoment: {
      const QuadRule rule = triangle_quadrature(quad_degree + r);
      const BaryPoly& w = ref_->interior_weight(dof.moment);
      double acc = 0.0;
      for (size_t q = 0; q < rule.size(); ++q) {
        const auto& l = rule.points[q];
        const Eigen::Vector2d x = geom_.point(l[0], l[1], l[2]);
        acc += rule.weights[q] * f.value(x.x(), x.y()) * w.eval(l[0], l[1], l[2]);
      }
      return acc;
    }
  }
  throw ParameterError("apply_dof: unknown DoF kind");
}

Eigen::VectorXd ElementBasis::interpolate(const ScalarField& f, int quad_degree) const {
  Eigen::VectorXd v(ndof());
  for (int i = 0; i < ndof(); ++i) v(i) = apply_dof(i, f, quad_degree);
  return v;
}

}  // namespace sgfem
