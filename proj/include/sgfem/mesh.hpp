#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

namespace sgfem {

/// Conforming triangulation of the unit square. Triangles are
/// counterclockwise; local edge e of a triangle is the edge opposite local
/// vertex e, i.e. it connects local vertices e+1 and e+2 (mod 3).
struct Mesh {
  std::vector<Eigen::Vector2d> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 2>> edges;      // global edges, lower vertex id first
  std::vector<std::array<int, 2>> edge_tris;  // adjacent triangles, -1 if absent
  std::vector<std::array<int, 3>> tri_edges;  // global edge id per local edge
  std::vector<bool> boundary_vertex;
  std::vector<bool> boundary_edge;
  double max_diameter = 0.0;  // h
  double min_angle = 0.0;     // degrees
  double perturb_used = 0.0;  // perturbation actually applied (after any halving)

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_triangles() const { return static_cast<int>(triangles.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
};

/// Structured n x n grid on [0,1]^2, each cell split along the diagonal
/// toward the upper-right corner. Interior vertices are shifted by
/// perturb * (1/n) * (dx, dy) with dx, dy uniform in [-1,1] from a mt19937
/// seeded with `seed`; boundary vertices stay fixed. If any triangle falls
/// below a 20-degree minimum angle the perturbation is halved (same seed)
/// and the mesh regenerated.
Mesh unit_square_mesh(int n, double perturb = 0.2, unsigned seed = 1);

/// Smallest interior angle over all triangles, in degrees.
double min_angle_degrees(const Mesh& mesh);

/// Geometry of one global edge: the global orientation every adjacent
/// element refers to. The normal is the lower-to-higher-id tangent rotated
/// to its clockwise side; sign = +1 for a triangle whose outward normal on
/// this edge agrees with the global normal.
struct EdgeGeometry {
  Eigen::Vector2d tangent;  // unit, lower id -> higher id
  Eigen::Vector2d normal;   // unit
  double length = 0.0;
  std::array<int, 2> adjacent{-1, -1};
  std::array<double, 2> sign{0.0, 0.0};
};
EdgeGeometry edge_geometry(const Mesh& mesh, int edge_id);

/// ASCII export: header line "ntri nvert", vertex coordinate lines, then
/// triangle connectivity lines.
std::string export_mesh(const Mesh& mesh);

}  // namespace sgfem
