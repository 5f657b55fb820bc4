#include "sgfem/norms.hpp"

#include <cmath>

#include "sgfem/errors.hpp"

namespace sgfem {

namespace {

struct DerivTables {
  Eigen::MatrixXd Dx, Dy, Hxx, Hxy, Hyy;  // (nd, nq), dual shapes
};

DerivTables physical_derivatives(const SpanTables& tables, const ElementBasis& basis) {
  const auto& gl = basis.geometry().grad_lambda;
  const int nd = static_cast<int>(tables.val.rows());
  const int nq = static_cast<int>(tables.val.cols());
  DerivTables d;
  d.Dx = Eigen::MatrixXd::Zero(nd, nq);
  d.Dy = Eigen::MatrixXd::Zero(nd, nq);
  d.Hxx = Eigen::MatrixXd::Zero(nd, nq);
  d.Hxy = Eigen::MatrixXd::Zero(nd, nq);
  d.Hyy = Eigen::MatrixXd::Zero(nd, nq);
  for (int a = 0; a < 3; ++a) {
    d.Dx += gl[static_cast<size_t>(a)].x() * tables.dl[static_cast<size_t>(a)];
    d.Dy += gl[static_cast<size_t>(a)].y() * tables.dl[static_cast<size_t>(a)];
  }
  int idx = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      const auto& ga = gl[static_cast<size_t>(a)];
      const auto& gb = gl[static_cast<size_t>(b)];
      const Eigen::MatrixXd& d2 = tables.d2l[static_cast<size_t>(idx++)];
      if (a == b) {
        d.Hxx += ga.x() * gb.x() * d2;
        d.Hxy += ga.x() * gb.y() * d2;
        d.Hyy += ga.y() * gb.y() * d2;
      } else {
        d.Hxx += 2.0 * ga.x() * gb.x() * d2;
        d.Hxy += (ga.x() * gb.y() + gb.x() * ga.y()) * d2;
        d.Hyy += 2.0 * ga.y() * gb.y() * d2;
      }
    }
  const Eigen::MatrixXd Ct = basis.coeffs().transpose();
  d.Dx = Ct * d.Dx;
  d.Dy = Ct * d.Dy;
  d.Hxx = Ct * d.Hxx;
  d.Hxy = Ct * d.Hxy;
  d.Hyy = Ct * d.Hyy;
  return d;
}

/// Local coefficient rows (2 x nd): row c = coefficients of component c.
Eigen::MatrixXd local_coeffs(const Mesh& mesh, const DofMap& dofmap,
                             const Eigen::VectorXd& u_coeffs, int t, int nd) {
  const auto ids = dofmap.cell_dofs(mesh, t);
  Eigen::MatrixXd c(2, nd);
  for (int j = 0; j < nd; ++j)
    for (int comp = 0; comp < 2; ++comp)
      c(comp, j) = u_coeffs(dofmap.displacement_dof(ids[static_cast<size_t>(j)], comp));
  return c;
}

/// Accumulates squared L2 gradient/Hessian norms of (u_h - exact) over one
/// physical sub-triangle of element `t`. Passing no exact solution measures
/// u_h itself.
void accumulate_on_subtriangle(const std::array<Eigen::Vector2d, 3>& sub, const QuadRule& rule,
                               const ElementBasis& basis, const Eigen::MatrixXd& coeffs2,
                               const ExactSolution* exact, double& grad2, double& hess2) {
  const double area =
      0.5 * std::abs((sub[1] - sub[0]).x() * (sub[2] - sub[0]).y() -
                     (sub[1] - sub[0]).y() * (sub[2] - sub[0]).x());
  for (size_t q = 0; q < rule.size(); ++q) {
    const auto& l = rule.points[q];
    const Eigen::Vector2d x = l[0] * sub[0] + l[1] * sub[1] + l[2] * sub[2];
    const auto bary = basis.geometry().barycentric(x);
    const Eigen::MatrixXd g = coeffs2 * basis.gradients(bary);  // (2, 2)
    const Eigen::MatrixXd h = coeffs2 * basis.hessians(bary);   // (2, 3)
    Eigen::Matrix2d ge = g;
    Eigen::Matrix<double, 2, 3> he = h;
    if (exact) {
      ge -= exact->grad_u(x.x(), x.y());
      he -= exact->hess_u(x.x(), x.y());
    }
    const double w = area * rule.weights[q];
    grad2 += w * ge.squaredNorm();
    for (int c = 0; c < 2; ++c)
      hess2 += w * (he(c, 0) * he(c, 0) + 2 * he(c, 1) * he(c, 1) + he(c, 2) * he(c, 2));
  }
}

/// Dyadic grading toward `corner` (a vertex of the triangle): at each level
/// split at edge midpoints, integrate the three children away from the
/// corner, recurse into the one touching it.
void graded_accumulate(const std::array<Eigen::Vector2d, 3>& tri, const Eigen::Vector2d& corner,
                       int levels, const QuadRule& rule, const ElementBasis& basis,
                       const Eigen::MatrixXd& coeffs2, const ExactSolution* exact,
                       double& grad2, double& hess2) {
  if (levels == 0) {
    accumulate_on_subtriangle(tri, rule, basis, coeffs2, exact, grad2, hess2);
    return;
  }
  int cv = 0;
  for (int v = 1; v < 3; ++v)
    if ((tri[static_cast<size_t>(v)] - corner).norm() <
        (tri[static_cast<size_t>(cv)] - corner).norm())
      cv = v;
  const Eigen::Vector2d a = tri[static_cast<size_t>(cv)];
  const Eigen::Vector2d b = tri[static_cast<size_t>((cv + 1) % 3)];
  const Eigen::Vector2d c = tri[static_cast<size_t>((cv + 2) % 3)];
  const Eigen::Vector2d mab = 0.5 * (a + b), mbc = 0.5 * (b + c), mca = 0.5 * (c + a);
  accumulate_on_subtriangle({mab, b, mbc}, rule, basis, coeffs2, exact, grad2, hess2);
  accumulate_on_subtriangle({mca, mbc, c}, rule, basis, coeffs2, exact, grad2, hess2);
  accumulate_on_subtriangle({mab, mbc, mca}, rule, basis, coeffs2, exact, grad2, hess2);
  graded_accumulate({a, mab, mca}, corner, levels - 1, rule, basis, coeffs2, exact, grad2,
                    hess2);
}

}  // namespace

double weighted_broken_norm(const Mesh& mesh, const DofMap& dofmap, const ReferenceBasis& ref,
                            const Eigen::VectorXd& u_coeffs, double iota, int quad_degree) {
  const SpanTables tables = tabulate_span(ref, triangle_quadrature(quad_degree));
  const int nq = static_cast<int>(tables.rule.size());
  const int nd = ref.size();
  double grad2 = 0.0, hess2 = 0.0;
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const TriangleGeometry geom = element_geometry(mesh, t);
    const ElementBasis basis(ref, geom);
    const DerivTables d = physical_derivatives(tables, basis);
    const Eigen::MatrixXd c2 = local_coeffs(mesh, dofmap, u_coeffs, t, nd);
    const Eigen::MatrixXd gx = c2 * d.Dx, gy = c2 * d.Dy;  // (2, nq)
    const Eigen::MatrixXd hxx = c2 * d.Hxx, hxy = c2 * d.Hxy, hyy = c2 * d.Hyy;
    for (int q = 0; q < nq; ++q) {
      const double w = geom.area * tables.rule.weights[static_cast<size_t>(q)];
      grad2 += w * (gx.col(q).squaredNorm() + gy.col(q).squaredNorm());
      hess2 += w * (hxx.col(q).squaredNorm() + 2 * hxy.col(q).squaredNorm() +
                    hyy.col(q).squaredNorm());
    }
  }
  return std::sqrt(grad2) + iota * std::sqrt(hess2);
}

double relative_error(const Mesh& mesh, const DofMap& dofmap, const ReferenceBasis& ref,
                      const Eigen::VectorXd& u_coeffs, const ExactSolution& exact,
                      double iota, int quad_degree, int grading_levels) {
  const SpanTables tables = tabulate_span(ref, triangle_quadrature(quad_degree));
  const int nq = static_cast<int>(tables.rule.size());
  const int nd = ref.size();
  double num_grad2 = 0.0, num_hess2 = 0.0;
  double den_grad2 = 0.0, den_hess2 = 0.0;
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const TriangleGeometry geom = element_geometry(mesh, t);
    const ElementBasis basis(ref, geom);
    bool graded = false;
    if (exact.singular)
      for (const auto& v : geom.vertex)
        if ((v - exact.singular_point).norm() < 1e-12) graded = true;

    if (graded) {
      const Eigen::MatrixXd c2 = local_coeffs(mesh, dofmap, u_coeffs, t, nd);
      graded_accumulate(geom.vertex, exact.singular_point, grading_levels, tables.rule, basis,
                        c2, &exact, num_grad2, num_hess2);
      graded_accumulate(geom.vertex, exact.singular_point, grading_levels, tables.rule, basis,
                        Eigen::MatrixXd::Zero(2, nd), &exact, den_grad2, den_hess2);
      continue;
    }

    const DerivTables d = physical_derivatives(tables, basis);
    const Eigen::MatrixXd c2 = local_coeffs(mesh, dofmap, u_coeffs, t, nd);
    const Eigen::MatrixXd gx = c2 * d.Dx, gy = c2 * d.Dy;
    const Eigen::MatrixXd hxx = c2 * d.Hxx, hxy = c2 * d.Hxy, hyy = c2 * d.Hyy;
    for (int q = 0; q < nq; ++q) {
      const auto& l = tables.rule.points[static_cast<size_t>(q)];
      const Eigen::Vector2d x = geom.point(l[0], l[1], l[2]);
      const double w = geom.area * tables.rule.weights[static_cast<size_t>(q)];
      const Eigen::Matrix2d ge = exact.grad_u(x.x(), x.y());
      const Eigen::Matrix<double, 2, 3> he = exact.hess_u(x.x(), x.y());
      den_grad2 += w * ge.squaredNorm();
      for (int c = 0; c < 2; ++c)
        den_hess2 += w * (he(c, 0) * he(c, 0) + 2 * he(c, 1) * he(c, 1) + he(c, 2) * he(c, 2));
      Eigen::Matrix2d gd;
      gd.col(0) = gx.col(q);
      gd.col(1) = gy.col(q);
      // gd rows are components, columns derivatives; exact grad_u row c is
      // grad u_c -> same layout.
      gd -= ge;
      num_grad2 += w * gd.squaredNorm();
      for (int c = 0; c < 2; ++c) {
        const double dxx = hxx(c, q) - he(c, 0);
        const double dxy = hxy(c, q) - he(c, 1);
        const double dyy = hyy(c, q) - he(c, 2);
        num_hess2 += w * (dxx * dxx + 2 * dxy * dxy + dyy * dyy);
      }
    }
  }
  const double num = std::sqrt(num_grad2) + iota * std::sqrt(num_hess2);
  const double den = std::sqrt(den_grad2) + iota * std::sqrt(den_hess2);
  if (!(den > 0)) throw ParameterError("relative_error: exact solution has zero energy norm");
  return num / den;
}

RateTable rate_table(const std::vector<double>& hs, const std::vector<double>& errors,
                     double iota) {
  if (hs.size() != errors.size()) throw ParameterError("rate_table: size mismatch");
  RateTable t;
  for (size_t i = 0; i < hs.size(); ++i) {
    RateRow row;
    row.iota = iota;
    row.h = hs[i];
    row.rel_error = errors[i];
    if (i > 0 && errors[i] > 0 && errors[i - 1] > 0)
      row.rate = std::log2(errors[i - 1] / errors[i]);
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace sgfem
