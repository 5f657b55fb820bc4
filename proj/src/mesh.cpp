#include "sgfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "sgfem/errors.hpp"

namespace sgfem {

namespace {

double triangle_min_angle(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                          const Eigen::Vector2d& c) {
  const std::array<Eigen::Vector2d, 3> p{a, b, c};
  double best = 180.0;
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector2d u = p[static_cast<size_t>((i + 1) % 3)] - p[static_cast<size_t>(i)];
    const Eigen::Vector2d v = p[static_cast<size_t>((i + 2) % 3)] - p[static_cast<size_t>(i)];
    const double ang = std::atan2(std::abs(u.x() * v.y() - u.y() * v.x()), u.dot(v));
    best = std::min(best, ang * 180.0 / M_PI);
  }
  return best;
}

Mesh build(int n, double perturb, unsigned seed) {
  Mesh m;
  const double h = 1.0 / n;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      Eigen::Vector2d p(i * h, j * h);
      const bool boundary = i == 0 || i == n || j == 0 || j == n;
      if (!boundary) {
        // Draw both offsets unconditionally so the stream position per vertex
        // does not depend on the perturbation size.
        const double dx = unit(rng);
        const double dy = unit(rng);
        p.x() += perturb * h * dx;
        p.y() += perturb * h * dy;
      }
      m.vertices.push_back(p);
      m.boundary_vertex.push_back(boundary);
    }
  auto vid = [n](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int v00 = vid(i, j), v10 = vid(i + 1, j);
      const int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
      m.triangles.push_back({v00, v10, v11});
      m.triangles.push_back({v00, v11, v01});
    }

  // Edge topology: local edge e opposite local vertex e.
  std::map<std::array<int, 2>, int> edge_id;
  m.tri_edges.resize(m.triangles.size());
  for (int t = 0; t < m.n_triangles(); ++t) {
    const auto& tri = m.triangles[static_cast<size_t>(t)];
    for (int e = 0; e < 3; ++e) {
      int a = tri[static_cast<size_t>((e + 1) % 3)];
      int b = tri[static_cast<size_t>((e + 2) % 3)];
      std::array<int, 2> key{std::min(a, b), std::max(a, b)};
      auto it = edge_id.find(key);
      int id;
      if (it == edge_id.end()) {
        id = m.n_edges();
        edge_id.emplace(key, id);
        m.edges.push_back(key);
        m.edge_tris.push_back({t, -1});
      } else {
        id = it->second;
        auto& adj = m.edge_tris[static_cast<size_t>(id)];
        if (adj[1] != -1) throw ParameterError("unit_square_mesh: non-manifold edge");
        adj[1] = t;
      }
      m.tri_edges[static_cast<size_t>(t)][static_cast<size_t>(e)] = id;
    }
  }
  m.boundary_edge.resize(m.edges.size());
  for (int e = 0; e < m.n_edges(); ++e)
    m.boundary_edge[static_cast<size_t>(e)] = m.edge_tris[static_cast<size_t>(e)][1] == -1;

  double hmax = 0.0;
  for (const auto& tri : m.triangles)
    for (int e = 0; e < 3; ++e) {
      const auto& a = m.vertices[static_cast<size_t>(tri[static_cast<size_t>(e)])];
      const auto& b = m.vertices[static_cast<size_t>(tri[static_cast<size_t>((e + 1) % 3)])];
      hmax = std::max(hmax, (a - b).norm());
    }
  m.max_diameter = hmax;
  m.min_angle = min_angle_degrees(m);
  m.perturb_used = perturb;
  return m;
}

}  // namespace

double min_angle_degrees(const Mesh& mesh) {
  double best = 180.0;
  for (const auto& tri : mesh.triangles)
    best = std::min(best, triangle_min_angle(mesh.vertices[static_cast<size_t>(tri[0])],
                                             mesh.vertices[static_cast<size_t>(tri[1])],
                                             mesh.vertices[static_cast<size_t>(tri[2])]));
  return best;
}

Mesh unit_square_mesh(int n, double perturb, unsigned seed) {
  if (n < 1) throw ParameterError("unit_square_mesh: need n >= 1");
  if (perturb < 0.0 || perturb > 0.5)
    throw ParameterError("unit_square_mesh: perturb must lie in [0, 0.5]");
  double p = perturb;
  for (int attempt = 0; attempt < 20; ++attempt) {
    Mesh m = build(n, p, seed);
    if (m.min_angle >= 20.0) return m;
    p *= 0.5;
  }
  throw ParameterError("unit_square_mesh: could not reach the minimum-angle bound");
}

EdgeGeometry edge_geometry(const Mesh& mesh, int edge_id) {
  if (edge_id < 0 || edge_id >= mesh.n_edges())
    throw ParameterError("edge_geometry: edge id out of range");
  const auto& e = mesh.edges[static_cast<size_t>(edge_id)];
  const Eigen::Vector2d a = mesh.vertices[static_cast<size_t>(e[0])];
  const Eigen::Vector2d b = mesh.vertices[static_cast<size_t>(e[1])];
  EdgeGeometry g;
  g.length = (b - a).norm();
  g.tangent = (b - a) / g.length;
  g.normal = Eigen::Vector2d(g.tangent.y(), -g.tangent.x());
  g.adjacent = mesh.edge_tris[static_cast<size_t>(edge_id)];
  for (int s = 0; s < 2; ++s) {
    const int t = g.adjacent[static_cast<size_t>(s)];
    if (t < 0) continue;
    const auto& tri = mesh.triangles[static_cast<size_t>(t)];
    // Outward normal on this edge points away from the opposite vertex.
    int opp = -1;
    for (int v = 0; v < 3; ++v)
      if (tri[static_cast<size_t>(v)] != e[0] && tri[static_cast<size_t>(v)] != e[1]) opp = v;
    const Eigen::Vector2d mid = 0.5 * (a + b);
    const Eigen::Vector2d away =
        mid - mesh.vertices[static_cast<size_t>(tri[static_cast<size_t>(opp)])];
    g.sign[static_cast<size_t>(s)] = away.dot(g.normal) > 0 ? 1.0 : -1.0;
  }
  return g;
}

std::string export_mesh(const Mesh& mesh) {
  std::ostringstream out;
  out.precision(17);
  out << mesh.n_triangles() << " " << mesh.n_vertices() << "\n";
  for (const auto& v : mesh.vertices) out << v.x() << " " << v.y() << "\n";
  for (const auto& t : mesh.triangles) out << t[0] << " " << t[1] << " " << t[2] << "\n";
  return out.str();
}

}  // namespace sgfem
