#include "sgfem/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "sgfem/errors.hpp"

namespace sgfem {

namespace {

/// Golub-Welsch from symmetric tridiagonal recurrence coefficients.
/// diag[i], offdiag[i] (i>=1), mu0 = integral of the weight.
void golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0,
                  std::vector<double>& nodes, std::vector<double>& weights) {
  const int m = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    J(i, i) = diag(i);
    if (i > 0) J(i, i - 1) = J(i - 1, i) = offdiag(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  nodes.resize(static_cast<size_t>(m));
  weights.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    nodes[static_cast<size_t>(i)] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    weights[static_cast<size_t>(i)] = mu0 * v0 * v0;
  }
}

}  // namespace

void gauss_jacobi(int m, double a, double b, std::vector<double>& nodes,
                  std::vector<double>& weights) {
  if (m < 1) throw ParameterError("gauss_jacobi: need at least one point");
  Eigen::VectorXd diag(m), offd(m);
  const double ab = a + b;
  for (int n = 0; n < m; ++n) {
    const double den = (2 * n + ab) * (2 * n + ab + 2);
    diag(n) = den == 0.0 ? (b - a) / (ab + 2) : (b * b - a * a) / den;
  }
  offd(0) = 0.0;
  for (int n = 1; n < m; ++n) {
    double bn2;
    if (n == 1) {
      bn2 = 4 * (1 + a) * (1 + b) / ((2 + ab) * (2 + ab) * (3 + ab));
    } else {
      bn2 = 4.0 * n * (n + a) * (n + b) * (n + ab) /
            ((2 * n + ab) * (2 * n + ab) * (2 * n + ab + 1) * (2 * n + ab - 1));
    }
    offd(n) = std::sqrt(bn2);
  }
  const double mu0 = std::pow(2.0, ab + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) /
                     std::tgamma(ab + 2);
  golub_welsch(diag, offd, mu0, nodes, weights);
}

void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights) {
  gauss_jacobi(m, 0.0, 0.0, nodes, weights);
}

EdgeRule edge_quadrature(int exact_degree) {
  if (exact_degree < 0 || exact_degree > 99)
    throw CapabilityError("edge_quadrature: unsupported degree");
  EdgeRule r;
  const int m = exact_degree / 2 + 1;
  gauss_legendre(m, r.nodes, r.weights);
  r.exact_degree = 2 * m - 1;
  return r;
}

QuadRule triangle_quadrature(int exact_degree) {
  if (exact_degree < 0 || exact_degree > 50)
    throw CapabilityError("triangle_quadrature: unsupported degree");
  QuadRule r;
  if (exact_degree <= 1) {
    r.points = {{1.0 / 3, 1.0 / 3, 1.0 / 3}};
    r.weights = {1.0};
    r.exact_degree = 1;
    return r;
  }
  if (exact_degree == 2) {
    r.points = {{2.0 / 3, 1.0 / 6, 1.0 / 6}, {1.0 / 6, 2.0 / 3, 1.0 / 6}, {1.0 / 6, 1.0 / 6, 2.0 / 3}};
    r.weights = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    r.exact_degree = 2;
    return r;
  }

  // Collapsed tensor Gauss: x = xi*(1-eta), y = eta on the reference triangle,
  // with the (1-eta) Jacobian absorbed into a Gauss-Jacobi rule.
  const int m = exact_degree / 2 + 1;
  std::vector<double> xn, xw, yn, yw;
  gauss_legendre(m, xn, xw);
  gauss_jacobi(m, 1.0, 0.0, yn, yw);
  for (int j = 0; j < m; ++j) {
    const double eta = 0.5 * (1.0 + yn[static_cast<size_t>(j)]);
    // integral over [0,1] with weight (1-eta): 1/4 of the [-1,1] rule value
    const double wy = 0.25 * yw[static_cast<size_t>(j)];
    for (int i = 0; i < m; ++i) {
      const double xi = 0.5 * (1.0 + xn[static_cast<size_t>(i)]);
      const double wx = 0.5 * xw[static_cast<size_t>(i)];
      const double x = xi * (1.0 - eta);
      const double y = eta;
      r.points.push_back({1.0 - x - y, x, y});
      // wx*wy integrates over the unit triangle (area 1/2); normalize to mean
      r.weights.push_back(2.0 * wx * wy);
    }
  }
  r.exact_degree = 2 * m - 1;
  return r;
}

}  // namespace sgfem
