#include "sgfem/assembly.hpp"

#include <vector>

#include "sgfem/errors.hpp"

namespace sgfem {

MaterialParams MaterialParams::from_E_nu(double E, double nu, double iota) {
  if (!(nu < 0.5) || nu <= -1.0) throw ParameterError("MaterialParams: need -1 < nu < 0.5");
  if (!(iota > 0.0) || iota > 1.0) throw ParameterError("MaterialParams: need 0 < iota <= 1");
  MaterialParams p;
  p.E = E;
  p.nu = nu;
  p.iota = iota;
  p.lambda = E * nu / ((1 + nu) * (1 - 2 * nu));
  p.mu = E / (2 * (1 + nu));
  return p;
}

AssembledBlocks assemble_blocks(const Mesh& mesh, const DofMap& dofmap,
                                const ReferenceBasis& ref, const MaterialParams& params,
                                const VectorField& f, int quad_degree,
                                bool with_norm_gram) {
  const int min_degree = 2 * (ref.order() + 3) - 4;
  if (quad_degree < min_degree)
    throw CapabilityError("assemble_blocks: quadrature degree too low for exact stiffness");
  const SpanTables tables = tabulate_span(ref, triangle_quadrature(quad_degree));
  const int nq = static_cast<int>(tables.rule.size());
  const int nd = ref.size();
  const double iota2 = params.iota * params.iota;

  using Trip = Eigen::Triplet<double>;
  std::vector<Trip> tA, tB, tC, tX;
  Eigen::VectorXd load = Eigen::VectorXd::Zero(dofmap.n_u);

  Eigen::MatrixXd hat(3, nq);  // P1 values = barycentric coordinates
  for (int q = 0; q < nq; ++q)
    for (int v = 0; v < 3; ++v) hat(v, q) = tables.rule.points[static_cast<size_t>(q)][static_cast<size_t>(v)];

  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const TriangleGeometry geom = element_geometry(mesh, t);
    const ElementBasis basis(ref, geom);
    const Eigen::MatrixXd Ct = basis.coeffs().transpose();  // (nd, nspan)

    // Physical derivative tables of the dual shapes (nd x nq).
    const auto& gl = geom.grad_lambda;
    Eigen::MatrixXd Dx = Eigen::MatrixXd::Zero(nd, nq), Dy = Eigen::MatrixXd::Zero(nd, nq);
    for (int a = 0; a < 3; ++a) {
      Dx += gl[static_cast<size_t>(a)].x() * tables.dl[static_cast<size_t>(a)];
      Dy += gl[static_cast<size_t>(a)].y() * tables.dl[static_cast<size_t>(a)];
    }
    Eigen::MatrixXd Hxx = Eigen::MatrixXd::Zero(nd, nq), Hxy = Hxx, Hyy = Hxx;
    int idx = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) {
        const auto& ga = gl[static_cast<size_t>(a)];
        const auto& gb = gl[static_cast<size_t>(b)];
        const Eigen::MatrixXd& d2 = tables.d2l[static_cast<size_t>(idx++)];
        if (a == b) {
          Hxx += ga.x() * gb.x() * d2;
          Hxy += ga.x() * gb.y() * d2;
          Hyy += ga.y() * gb.y() * d2;
        } else {
          Hxx += 2.0 * ga.x() * gb.x() * d2;
          Hxy += (ga.x() * gb.y() + gb.x() * ga.y()) * d2;
          Hyy += 2.0 * ga.y() * gb.y() * d2;
        }
      }
    const Eigen::MatrixXd V = Ct * tables.val;
    Dx = Ct * Dx;
    Dy = Ct * Dy;
    Hxx = Ct * Hxx;
    Hxy = Ct * Hxy;
    Hyy = Ct * Hyy;

    Eigen::VectorXd w(nq);
    for (int q = 0; q < nq; ++q) w(q) = geom.area * tables.rule.weights[static_cast<size_t>(q)];
    const Eigen::MatrixXd DxW = Dx * w.asDiagonal(), DyW = Dy * w.asDiagonal();
    const Eigen::MatrixXd Gxx = DxW * Dx.transpose(), Gxy = DxW * Dy.transpose();
    const Eigen::MatrixXd Gyy = DyW * Dy.transpose();
    const Eigen::MatrixXd HxxW = Hxx * w.asDiagonal(), HxyW = Hxy * w.asDiagonal(),
                          HyyW = Hyy * w.asDiagonal();
    const Eigen::MatrixXd Mxx_xx = HxxW * Hxx.transpose(), Mxy_xy = HxyW * Hxy.transpose(),
                          Myy_yy = HyyW * Hyy.transpose(), Mxx_xy = HxxW * Hxy.transpose(),
                          Mxy_yy = HxyW * Hyy.transpose();

    // Component blocks of A = 2mu [eps:eps + iota^2 grad-eps:grad-eps].
    Eigen::MatrixXd A00 = Gxx + 0.5 * Gyy +
                          iota2 * (0.5 * (Mxx_xx + 2 * Mxy_xy + Myy_yy) +
                                   0.5 * (Mxx_xx + Mxy_xy));
    Eigen::MatrixXd A11 = Gyy + 0.5 * Gxx +
                          iota2 * (0.5 * (Mxx_xx + 2 * Mxy_xy + Myy_yy) +
                                   0.5 * (Mxy_xy + Myy_yy));
    // (c,d) = (0,1): 1/2 (g_j)_y (g_m)_x + iota^2/2 col_y(H_j).col_x(H_m)
    Eigen::MatrixXd A01 = 0.5 * DyW * Dx.transpose() +
                          0.5 * iota2 * (Mxx_xy.transpose() + Mxy_yy.transpose());
    A00 *= 2 * params.mu;
    A11 *= 2 * params.mu;
    A01 *= 2 * params.mu;

    // Norm Gram X: componentwise grad-grad + iota^2 hess:hess.
    Eigen::MatrixXd Xd;
    if (with_norm_gram) Xd = Gxx + Gyy + iota2 * (Mxx_xx + 2 * Mxy_xy + Myy_yy);

    // B: rows P1 hats, columns displacement.
    const Eigen::MatrixXd hatW = hat * w.asDiagonal();
    Eigen::MatrixXd B0 = hatW * Dx.transpose();  // (3, nd), c = 0 value part
    Eigen::MatrixXd B1 = hatW * Dy.transpose();
    const Eigen::VectorXd SHxx = HxxW.rowwise().sum(), SHxy = HxyW.rowwise().sum(),
                          SHyy = HyyW.rowwise().sum();
    for (int v = 0; v < 3; ++v) {
      const auto& g = gl[static_cast<size_t>(v)];
      B0.row(v) += iota2 * (g.x() * SHxx + g.y() * SHxy).transpose();
      B1.row(v) += iota2 * (g.x() * SHxy + g.y() * SHyy).transpose();
    }

    // C: P1 mass + iota^2 stiffness.
    Eigen::MatrixXd Cl = hatW * hat.transpose();
    for (int v = 0; v < 3; ++v)
      for (int u = 0; u < 3; ++u)
        Cl(v, u) += iota2 * geom.area * gl[static_cast<size_t>(v)].dot(gl[static_cast<size_t>(u)]);

    // Load.
    Eigen::MatrixXd fv(2, nq);
    for (int q = 0; q < nq; ++q) {
      const auto& l = tables.rule.points[static_cast<size_t>(q)];
      const Eigen::Vector2d x = geom.point(l[0], l[1], l[2]);
      fv.col(q) = f(x.x(), x.y());
    }
    const Eigen::MatrixXd lv = V * w.asDiagonal() * fv.transpose();  // (nd, 2)

    const std::vector<int> scal = dofmap.cell_dofs(mesh, t);
    const auto& tri = mesh.triangles[static_cast<size_t>(t)];
    for (int j = 0; j < nd; ++j) {
      const int gj0 = dofmap.displacement_dof(scal[static_cast<size_t>(j)], 0);
      const int gj1 = dofmap.displacement_dof(scal[static_cast<size_t>(j)], 1);
      load(gj0) += lv(j, 0);
      load(gj1) += lv(j, 1);
      for (int m = 0; m < nd; ++m) {
        const int gm0 = dofmap.displacement_dof(scal[static_cast<size_t>(m)], 0);
        const int gm1 = dofmap.displacement_dof(scal[static_cast<size_t>(m)], 1);
        tA.emplace_back(gj0, gm0, A00(j, m));
        tA.emplace_back(gj1, gm1, A11(j, m));
        tA.emplace_back(gj0, gm1, A01(j, m));
        tA.emplace_back(gj1, gm0, A01(m, j));
        if (with_norm_gram) {
          tX.emplace_back(gj0, gm0, Xd(j, m));
          tX.emplace_back(gj1, gm1, Xd(j, m));
        }
      }
      for (int v = 0; v < 3; ++v) {
        tB.emplace_back(tri[static_cast<size_t>(v)], gj0, B0(v, j));
        tB.emplace_back(tri[static_cast<size_t>(v)], gj1, B1(v, j));
      }
    }
    for (int v = 0; v < 3; ++v)
      for (int u = 0; u < 3; ++u)
        tC.emplace_back(tri[static_cast<size_t>(v)], tri[static_cast<size_t>(u)], Cl(v, u));
  }

  AssembledBlocks out;
  out.A.resize(dofmap.n_u, dofmap.n_u);
  out.A.setFromTriplets(tA.begin(), tA.end());
  out.B.resize(dofmap.n_p, dofmap.n_u);
  out.B.setFromTriplets(tB.begin(), tB.end());
  out.C.resize(dofmap.n_p, dofmap.n_p);
  out.C.setFromTriplets(tC.begin(), tC.end());
  if (with_norm_gram) {
    out.X.resize(dofmap.n_u, dofmap.n_u);
    out.X.setFromTriplets(tX.begin(), tX.end());
  }
  out.load = std::move(load);
  return out;
}

SaddleSystem build_saddle_system(const AssembledBlocks& blocks, const DofMap& dofmap,
                                 const Mesh& mesh, const MaterialParams& params,
                                 const BcValues& bc, bool mean_constraint) {
  SaddleSystem sys;
  sys.n_u_total = dofmap.n_u;
  sys.n_p_total = dofmap.n_p;
  sys.u_fixed = bc.u;
  sys.p_fixed = bc.p;
  sys.has_mean_row = mean_constraint;

  std::vector<int> u_red(static_cast<size_t>(dofmap.n_u), -1);
  std::vector<int> p_red(static_cast<size_t>(dofmap.n_p), -1);
  for (int i = 0; i < dofmap.n_u; ++i)
    if (!bc.u_fixed[static_cast<size_t>(i)]) {
      u_red[static_cast<size_t>(i)] = static_cast<int>(sys.u_free.size());
      sys.u_free.push_back(i);
    }
  const int nuf = static_cast<int>(sys.u_free.size());
  for (int i = 0; i < dofmap.n_p; ++i)
    if (!bc.p_fixed[static_cast<size_t>(i)]) {
      p_red[static_cast<size_t>(i)] = nuf + static_cast<int>(sys.p_free.size());
      sys.p_free.push_back(i);
    }
  const int npf = static_cast<int>(sys.p_free.size());
  const int n = nuf + npf + (mean_constraint ? 1 : 0);

  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < nuf; ++i) rhs(i) = blocks.load(sys.u_free[static_cast<size_t>(i)]);

  for (int col = 0; col < blocks.A.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(blocks.A, col); it; ++it) {
      const int ri = u_red[static_cast<size_t>(it.row())];
      const int ci = u_red[static_cast<size_t>(it.col())];
      if (ri >= 0 && ci >= 0)
        trip.emplace_back(ri, ci, it.value());
      else if (ri >= 0)
        rhs(ri) -= it.value() * bc.u(it.col());
    }
  for (int col = 0; col < blocks.B.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(blocks.B, col); it; ++it) {
      const int pi = p_red[static_cast<size_t>(it.row())];
      const int ui = u_red[static_cast<size_t>(it.col())];
      if (pi >= 0 && ui >= 0) {
        trip.emplace_back(pi, ui, it.value());
        trip.emplace_back(ui, pi, it.value());
      } else if (pi >= 0) {
        rhs(pi) -= it.value() * bc.u(it.col());
      } else if (ui >= 0) {
        rhs(ui) -= it.value() * bc.p(it.row());
      }
    }
  const double inv_lambda = 1.0 / params.lambda;
  for (int col = 0; col < blocks.C.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(blocks.C, col); it; ++it) {
      const int ri = p_red[static_cast<size_t>(it.row())];
      const int ci = p_red[static_cast<size_t>(it.col())];
      if (ri >= 0 && ci >= 0)
        trip.emplace_back(ri, ci, -inv_lambda * it.value());
      else if (ri >= 0)
        rhs(ri) += inv_lambda * it.value() * bc.p(it.col());
    }
  if (mean_constraint) {
    const Eigen::VectorXd w = mean_constraint_row(dofmap, mesh);
    const int last = n - 1;
    double fixed_mean = 0.0;
    for (int i = 0; i < dofmap.n_p; ++i) {
      const int pi = p_red[static_cast<size_t>(i)];
      if (pi >= 0) {
        trip.emplace_back(last, pi, w(i));
        trip.emplace_back(pi, last, w(i));
      } else {
        fixed_mean += w(i) * bc.p(i);
      }
    }
    rhs(last) = -fixed_mean;
  }

  sys.K.resize(n, n);
  sys.K.setFromTriplets(trip.begin(), trip.end());
  sys.rhs = std::move(rhs);
  return sys;
}

}  // namespace sgfem
