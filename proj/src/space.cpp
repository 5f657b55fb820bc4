#include "sgfem/space.hpp"

#include "sgfem/errors.hpp"
#include "sgfem/jacobi.hpp"

namespace sgfem {

std::vector<int> DofMap::cell_dofs(const Mesh& mesh, int t) const {
  const auto& tri = mesh.triangles[static_cast<size_t>(t)];
  const auto& te = mesh.tri_edges[static_cast<size_t>(t)];
  std::vector<int> ids;
  for (int v = 0; v < 3; ++v) ids.push_back(vertex_dof(tri[static_cast<size_t>(v)]));
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < n_edge_moments; ++k)
      ids.push_back(edge_value_dof(te[static_cast<size_t>(i)], k));
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < n_edge_moments; ++k)
      ids.push_back(edge_normal_dof(te[static_cast<size_t>(i)], k));
  for (int m = 0; m < n_interior; ++m) ids.push_back(interior_dof(t, m));
  return ids;
}

DofMap build_dofmap(const Mesh& mesh, int r) {
  if (r != 2 && r != 3) throw CapabilityError("build_dofmap: order must be 2 or 3");
  DofMap d;
  d.r = r;
  d.nv = mesh.n_vertices();
  d.ne = mesh.n_edges();
  d.nt = mesh.n_triangles();
  d.n_edge_moments = r - 1;
  d.n_interior = (r - 1) * r / 2;
  d.n_scalar = d.nv + 2 * d.ne * d.n_edge_moments + d.nt * d.n_interior;
  d.n_u = 2 * d.n_scalar;
  if (r != 2)
    throw CapabilityError("build_dofmap: pressure space implemented for r = 2 only");
  d.n_p = d.nv;

  d.scalar_boundary.assign(static_cast<size_t>(d.n_scalar), false);
  for (int v = 0; v < d.nv; ++v)
    if (mesh.boundary_vertex[static_cast<size_t>(v)])
      d.scalar_boundary[static_cast<size_t>(d.vertex_dof(v))] = true;
  for (int e = 0; e < d.ne; ++e)
    if (mesh.boundary_edge[static_cast<size_t>(e)])
      for (int k = 0; k < d.n_edge_moments; ++k) {
        d.scalar_boundary[static_cast<size_t>(d.edge_value_dof(e, k))] = true;
        d.scalar_boundary[static_cast<size_t>(d.edge_normal_dof(e, k))] = true;
      }
  d.pressure_boundary.assign(static_cast<size_t>(d.n_p), false);
  for (int v = 0; v < d.nv; ++v)
    if (mesh.boundary_vertex[static_cast<size_t>(v)])
      d.pressure_boundary[static_cast<size_t>(v)] = true;
  return d;
}

TriangleGeometry element_geometry(const Mesh& mesh, int t) {
  const auto& tri = mesh.triangles[static_cast<size_t>(t)];
  TriangleGeometry g = TriangleGeometry::from_vertices(
      {mesh.vertices[static_cast<size_t>(tri[0])], mesh.vertices[static_cast<size_t>(tri[1])],
       mesh.vertices[static_cast<size_t>(tri[2])]});
  for (int i = 0; i < 3; ++i) {
    const int ge = mesh.tri_edges[static_cast<size_t>(t)][static_cast<size_t>(i)];
    const auto& ev = mesh.edges[static_cast<size_t>(ge)];
    const EdgeGeometry eg = edge_geometry(mesh, ge);
    g.normal_sign[static_cast<size_t>(i)] =
        eg.normal.dot(g.outward_normal[static_cast<size_t>(i)]) > 0 ? 1.0 : -1.0;
    // Local parameter is +1 at local vertex i+1; the global one at the
    // higher-id endpoint.
    const int at_plus = tri[static_cast<size_t>((i + 1) % 3)];
    g.param_sign[static_cast<size_t>(i)] = at_plus == ev[1] ? 1.0 : -1.0;
  }
  return g;
}

BoundaryData BoundaryData::homogeneous() {
  BoundaryData d;
  d.u = [](double, double) { return Eigen::Vector2d::Zero().eval(); };
  d.grad_u = [](double, double) { return Eigen::Matrix2d::Zero().eval(); };
  d.p = [](double, double) { return 0.0; };
  return d;
}

BcValues apply_essential_bcs(const DofMap& dofmap, const Mesh& mesh, const BoundaryData& data,
                             int quad_degree) {
  BcValues bc;
  bc.u = Eigen::VectorXd::Zero(dofmap.n_u);
  bc.p = Eigen::VectorXd::Zero(dofmap.n_p);
  bc.u_fixed.assign(static_cast<size_t>(dofmap.n_u), false);
  bc.p_fixed.assign(static_cast<size_t>(dofmap.n_p), false);
  for (int s = 0; s < dofmap.n_scalar; ++s)
    if (dofmap.scalar_boundary[static_cast<size_t>(s)])
      for (int c = 0; c < 2; ++c)
        bc.u_fixed[static_cast<size_t>(dofmap.displacement_dof(s, c))] = true;
  for (int v = 0; v < dofmap.n_p; ++v)
    bc.p_fixed[static_cast<size_t>(v)] = dofmap.pressure_boundary[static_cast<size_t>(v)];

  for (int v = 0; v < mesh.n_vertices(); ++v) {
    if (!mesh.boundary_vertex[static_cast<size_t>(v)]) continue;
    const auto& x = mesh.vertices[static_cast<size_t>(v)];
    const Eigen::Vector2d uv = data.u(x.x(), x.y());
    for (int c = 0; c < 2; ++c)
      bc.u(dofmap.displacement_dof(dofmap.vertex_dof(v), c)) = uv(c);
    bc.p(v) = data.p(x.x(), x.y());
  }

  const EdgeRule rule = edge_quadrature(quad_degree);
  for (int e = 0; e < mesh.n_edges(); ++e) {
    if (!mesh.boundary_edge[static_cast<size_t>(e)]) continue;
    const auto& ev = mesh.edges[static_cast<size_t>(e)];
    const Eigen::Vector2d a = mesh.vertices[static_cast<size_t>(ev[0])];
    const Eigen::Vector2d b = mesh.vertices[static_cast<size_t>(ev[1])];
    const EdgeGeometry eg = edge_geometry(mesh, e);
    for (int k = 0; k < dofmap.n_edge_moments; ++k) {
      const UniPoly leg = jacobi_1d(k, 0, 0);
      const UniPoly jac = jacobi_1d(k, 2, 2);
      Eigen::Vector2d vmom = Eigen::Vector2d::Zero();
      Eigen::Vector2d nmom = Eigen::Vector2d::Zero();
      for (size_t q = 0; q < rule.size(); ++q) {
        const double t = rule.nodes[q];
        const Eigen::Vector2d x = 0.5 * (1 - t) * a + 0.5 * (1 + t) * b;
        const double w = 0.5 * rule.weights[q];
        vmom += w * leg.eval(t) * data.u(x.x(), x.y());
        nmom += w * jac.eval(t) * (data.grad_u(x.x(), x.y()) * eg.normal);
      }
      for (int c = 0; c < 2; ++c) {
        bc.u(dofmap.displacement_dof(dofmap.edge_value_dof(e, k), c)) = vmom(c);
        bc.u(dofmap.displacement_dof(dofmap.edge_normal_dof(e, k), c)) = nmom(c);
      }
    }
  }
  return bc;
}

Eigen::VectorXd mean_constraint_row(const DofMap& dofmap, const Mesh& mesh) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(dofmap.n_p);
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const auto& tri = mesh.triangles[static_cast<size_t>(t)];
    const double area =
        element_geometry(mesh, t).area;  // hat integral = area/3 per vertex
    for (int v = 0; v < 3; ++v) w(tri[static_cast<size_t>(v)]) += area / 3.0;
  }
  return w;
}

double evaluate_scalar(const Mesh& mesh, const DofMap& dofmap, const ReferenceBasis& ref,
                       const Eigen::VectorXd& scalar_coeffs, int t,
                       const std::array<double, 3>& bary) {
  const ElementBasis basis(ref, element_geometry(mesh, t));
  const Eigen::VectorXd vals = basis.values(bary);
  const auto ids = dofmap.cell_dofs(mesh, t);
  double s = 0.0;
  for (size_t j = 0; j < ids.size(); ++j)
    s += scalar_coeffs(ids[j]) * vals(static_cast<Eigen::Index>(j));
  return s;
}

}  // namespace sgfem
