#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sgfem/jacobi.hpp"
#include "sgfem/space.hpp"

using namespace sgfem;

namespace {

/// Random global scalar coefficient vector.
Eigen::VectorXd random_coeffs(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = unif(rng);
  return v;
}

}  // namespace

TEST_CASE("DoF counts on the n=2 mesh") {
  const Mesh mesh = unit_square_mesh(2, 0.0);
  const DofMap dm = build_dofmap(mesh, 2);
  CHECK(dm.n_scalar == 9 + 2 * 16 + 8);  // 49
  CHECK(dm.n_u == 98);
  CHECK(dm.n_p == 9);
  int free_p = 0;
  for (bool b : dm.pressure_boundary)
    if (!b) ++free_p;
  CHECK(free_p == 1);
}

TEST_CASE("shared entities resolve to identical global ids from both sides") {
  const Mesh mesh = unit_square_mesh(4, 0.2, 5);
  const DofMap dm = build_dofmap(mesh, 2);
  for (int e = 0; e < mesh.n_edges(); ++e) {
    if (mesh.boundary_edge[static_cast<size_t>(e)]) continue;
    const auto& adj = mesh.edge_tris[static_cast<size_t>(e)];
    std::array<int, 2> value_ids{}, normal_ids{};
    for (int s = 0; s < 2; ++s) {
      const int t = adj[static_cast<size_t>(s)];
      const auto ids = dm.cell_dofs(mesh, t);
      int local = -1;
      for (int i = 0; i < 3; ++i)
        if (mesh.tri_edges[static_cast<size_t>(t)][static_cast<size_t>(i)] == e) local = i;
      value_ids[static_cast<size_t>(s)] = ids[static_cast<size_t>(3 + local)];
      normal_ids[static_cast<size_t>(s)] = ids[static_cast<size_t>(6 + local)];
    }
    CHECK(value_ids[0] == value_ids[1]);
    CHECK(normal_ids[0] == normal_ids[1]);
  }
}

TEST_CASE("strong continuity: traces agree across interior edges") {
  const Mesh mesh = unit_square_mesh(4, 0.2, 9);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  const Eigen::VectorXd coeffs = random_coeffs(dm.n_scalar, 77);
  for (int e = 0; e < mesh.n_edges(); ++e) {
    if (mesh.boundary_edge[static_cast<size_t>(e)]) continue;
    const auto& ev = mesh.edges[static_cast<size_t>(e)];
    const Eigen::Vector2d a = mesh.vertices[static_cast<size_t>(ev[0])];
    const Eigen::Vector2d b = mesh.vertices[static_cast<size_t>(ev[1])];
    const auto& adj = mesh.edge_tris[static_cast<size_t>(e)];
    for (int s = 1; s <= 5; ++s) {
      const double t = s / 6.0;
      const Eigen::Vector2d x = (1 - t) * a + t * b;
      std::array<double, 2> vals{};
      for (int side = 0; side < 2; ++side) {
        const int tri = adj[static_cast<size_t>(side)];
        const auto bary = element_geometry(mesh, tri).barycentric(x);
        vals[static_cast<size_t>(side)] = evaluate_scalar(mesh, dm, ref, coeffs, tri, bary);
      }
      CHECK(std::abs(vals[0] - vals[1]) < 1e-10);
    }
  }
}

TEST_CASE("weak continuity: normal-derivative moments jump-free") {
  const Mesh mesh = unit_square_mesh(4, 0.2, 13);
  const DofMap dm = build_dofmap(mesh, 2);
  const ReferenceBasis ref(2);
  const Eigen::VectorXd coeffs = random_coeffs(dm.n_scalar, 99);
  const EdgeRule rule = edge_quadrature(24);
  for (int e = 0; e < mesh.n_edges(); ++e) {
    if (mesh.boundary_edge[static_cast<size_t>(e)]) continue;
    const auto& ev = mesh.edges[static_cast<size_t>(e)];
    const Eigen::Vector2d a = mesh.vertices[static_cast<size_t>(ev[0])];
    const Eigen::Vector2d b = mesh.vertices[static_cast<size_t>(ev[1])];
    const EdgeGeometry ge = edge_geometry(mesh, e);
    const auto& adj = mesh.edge_tris[static_cast<size_t>(e)];
    for (int k = 0; k <= dm.r - 2; ++k) {
      const UniPoly w = jacobi_1d(k, 2, 2);
      double jump_moment = 0.0;
      for (size_t q = 0; q < rule.size(); ++q) {
        const double t = rule.nodes[q];
        const Eigen::Vector2d x = 0.5 * (1 - t) * a + 0.5 * (1 + t) * b;
        std::array<double, 2> dn{};
        for (int side = 0; side < 2; ++side) {
          const int tri = adj[static_cast<size_t>(side)];
          const ElementBasis basis(ref, element_geometry(mesh, tri));
          const auto bary = basis.geometry().barycentric(x);
          const Eigen::MatrixXd g = basis.gradients(bary);
          const auto ids = dm.cell_dofs(mesh, tri);
          Eigen::Vector2d grad = Eigen::Vector2d::Zero();
          for (size_t j = 0; j < ids.size(); ++j)
            grad += coeffs(ids[j]) * g.row(static_cast<Eigen::Index>(j)).transpose();
          dn[static_cast<size_t>(side)] = grad.dot(ge.normal);
        }
        jump_moment += 0.5 * rule.weights[q] * (dn[0] - dn[1]) * w.eval(t);
      }
      CHECK(std::abs(jump_moment) < 1e-10);
    }
  }
}

TEST_CASE("homogeneous boundary data yields a zero fixed vector") {
  const Mesh mesh = unit_square_mesh(4, 0.2, 2);
  const DofMap dm = build_dofmap(mesh, 2);
  const BcValues bc = apply_essential_bcs(dm, mesh, BoundaryData::homogeneous());
  CHECK(bc.u.norm() == 0.0);
  CHECK(bc.p.norm() == 0.0);
  int fixed = 0;
  for (bool b : bc.u_fixed)
    if (b) ++fixed;
  // Boundary scalars: 16 boundary vertices + 16 boundary edges x 2 moments,
  // times 2 components.
  CHECK(fixed == 2 * (16 + 2 * 16));
}

TEST_CASE("linear boundary trace integrates to the midpoint value") {
  const Mesh mesh = unit_square_mesh(2, 0.0);
  const DofMap dm = build_dofmap(mesh, 2);
  BoundaryData data;
  data.u = [](double x, double) { return Eigen::Vector2d(x, 0.0); };
  data.grad_u = [](double, double) {
    Eigen::Matrix2d g;
    g << 1, 0, 0, 0;
    return g;
  };
  data.p = [](double, double) { return 0.0; };
  const BcValues bc = apply_essential_bcs(dm, mesh, data);
  // Bottom edge from (0,0) to (0.5,0): mean of u1 = 0.25.
  for (int e = 0; e < mesh.n_edges(); ++e) {
    if (!mesh.boundary_edge[static_cast<size_t>(e)]) continue;
    const auto& ev = mesh.edges[static_cast<size_t>(e)];
    const auto& a = mesh.vertices[static_cast<size_t>(ev[0])];
    const auto& b = mesh.vertices[static_cast<size_t>(ev[1])];
    if (a.isApprox(Eigen::Vector2d(0, 0)) && b.isApprox(Eigen::Vector2d(0.5, 0))) {
      const int id = dm.displacement_dof(dm.edge_value_dof(e, 0), 0);
      CHECK(bc.u(id) == doctest::Approx(0.25).epsilon(1e-13));
      // Normal moment of u1: grad u1 = (1,0), normal (0,-1) -> 0.
      const int idn = dm.displacement_dof(dm.edge_normal_dof(e, 0), 0);
      CHECK(bc.u(idn) == doctest::Approx(0.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("interpolated smooth trace converges at third order on the boundary") {
  // L2 boundary error of the edgewise reconstruction from (value-mean,
  // vertex) data for a smooth trace behaves like O(h^3) for r=2.
  BoundaryData data;
  data.u = [](double x, double y) {
    return Eigen::Vector2d(std::sin(x + 2 * y), std::cos(2 * x - y));
  };
  data.grad_u = [](double x, double y) {
    Eigen::Matrix2d g;
    g << std::cos(x + 2 * y), 2 * std::cos(x + 2 * y), -2 * std::sin(2 * x - y),
        std::sin(2 * x - y);
    return g;
  };
  data.p = [](double, double) { return 0.0; };
  const ReferenceBasis ref(2);
  std::vector<double> errs;
  for (int n : {2, 4, 8}) {
    const Mesh mesh = unit_square_mesh(n, 0.0);
    const DofMap dm = build_dofmap(mesh, 2);
    const BcValues bc = apply_essential_bcs(dm, mesh, data);
    // Evaluate the boundary trace of the discrete field determined by the
    // fixed DoFs on boundary elements.
    Eigen::VectorXd scalar = Eigen::VectorXd::Zero(dm.n_scalar);
    for (int s = 0; s < dm.n_scalar; ++s)
      scalar(s) = bc.u(dm.displacement_dof(s, 0));  // component u1
    double err2 = 0.0;
    const EdgeRule rule = edge_quadrature(12);
    for (int e = 0; e < mesh.n_edges(); ++e) {
      if (!mesh.boundary_edge[static_cast<size_t>(e)]) continue;
      const auto& ev = mesh.edges[static_cast<size_t>(e)];
      const auto& a = mesh.vertices[static_cast<size_t>(ev[0])];
      const auto& b = mesh.vertices[static_cast<size_t>(ev[1])];
      const int tri = mesh.edge_tris[static_cast<size_t>(e)][0];
      const double len = (b - a).norm();
      for (size_t q = 0; q < rule.size(); ++q) {
        const double t = rule.nodes[q];
        const Eigen::Vector2d x = 0.5 * (1 - t) * a + 0.5 * (1 + t) * b;
        const auto bary = element_geometry(mesh, tri).barycentric(x);
        const double vh = evaluate_scalar(mesh, dm, ref, scalar, tri, bary);
        const double diff = vh - data.u(x.x(), x.y())(0);
        err2 += 0.5 * rule.weights[q] * len * diff * diff;
      }
    }
    errs.push_back(std::sqrt(err2));
  }
  for (size_t i = 1; i < errs.size(); ++i) {
    const double rate = std::log2(errs[i - 1] / errs[i]);
    CHECK(rate > 2.5);
  }
}

TEST_CASE("mean constraint row integrates P1 fields exactly") {
  const Mesh mesh = unit_square_mesh(4, 0.2, 21);
  const DofMap dm = build_dofmap(mesh, 2);
  const Eigen::VectorXd w = mean_constraint_row(dm, mesh);
  // p == 1 -> total area.
  CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-12));
  // Hat at one interior vertex -> one third of the adjacent area.
  for (int v = 0; v < mesh.n_vertices(); ++v) {
    if (mesh.boundary_vertex[static_cast<size_t>(v)]) continue;
    double adj_area = 0.0;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
      const auto& tri = mesh.triangles[static_cast<size_t>(t)];
      if (tri[0] == v || tri[1] == v || tri[2] == v)
        adj_area += element_geometry(mesh, t).area;
    }
    CHECK(w(v) == doctest::Approx(adj_area / 3.0).epsilon(1e-12));
    break;
  }
}
