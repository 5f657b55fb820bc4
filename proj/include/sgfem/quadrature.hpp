#pragma once

#include <array>
#include <vector>

namespace sgfem {

/// Quadrature rule on a triangle in barycentric coordinates, normalized to
/// unit measure: sum of weights is 1 and sum w_i f(p_i) approximates the
/// *mean* of f over the triangle. Multiply by the element area to integrate.
struct QuadRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int exact_degree = 0;

  size_t size() const { return points.size(); }
};

/// 1D rule on [-1,1] with weights summing to 2 (Gauss-Legendre).
struct EdgeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exact_degree = 0;

  size_t size() const { return nodes.size(); }
};

/// Positive-weight triangle rule exact for total degree <= exact_degree.
/// Degree <= 1 is the centroid rule, degree 2 the symmetric 3-point rule,
/// higher degrees a collapsed tensor Gauss (Duffy) rule. Supported up to 50.
QuadRule triangle_quadrature(int exact_degree);

EdgeRule edge_quadrature(int exact_degree);

/// Gauss-Legendre nodes/weights on [-1,1] (Golub-Welsch).
void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights);

/// Gauss-Jacobi nodes/weights on [-1,1] for the weight (1-t)^a (1+t)^b.
void gauss_jacobi(int m, double a, double b, std::vector<double>& nodes,
                  std::vector<double>& weights);

}  // namespace sgfem
