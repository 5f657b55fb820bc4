#include <cmath>

#include "sgfem/errors.hpp"
#include "sgfem/exact_fields_gen.hpp"
#include "sgfem/norms.hpp"

namespace sgfem {

namespace {

Eigen::Vector2d unpack_value(const double* out) { return {out[0], out[1]}; }

Eigen::Matrix2d unpack_grad(const double* out) {
  Eigen::Matrix2d g;
  g << out[2], out[3], out[4], out[5];
  return g;
}

Eigen::Matrix<double, 2, 3> unpack_hess(const double* out) {
  Eigen::Matrix<double, 2, 3> h;
  h << out[6], out[7], out[8], out[9], out[10], out[11];
  return h;
}

}  // namespace

ExactSolution example_solution(int example, const MaterialParams& params) {
  ExactSolution sol;
  const double mu = params.mu;
  const double lambda = params.lambda;
  const double iota = params.iota;
  switch (example) {
    case 1: {
      sol.u = [](double x, double y) {
        double out[12];
        gen::example1_fields(x, y, out);
        return unpack_value(out);
      };
      sol.grad_u = [](double x, double y) {
        double out[12];
        gen::example1_fields(x, y, out);
        return unpack_grad(out);
      };
      sol.hess_u = [](double x, double y) {
        double out[12];
        gen::example1_fields(x, y, out);
        return unpack_hess(out);
      };
      sol.div_u = [](double, double) { return 0.0; };
      sol.p = [](double, double) { return 0.0; };
      // div u = 0, so the strong form collapses to mu (iota^2 lap^2 - lap) u.
      sol.f = [mu, iota](double x, double y) {
        double out[4];
        gen::example1_laplacians(x, y, out);
        return Eigen::Vector2d(mu * (iota * iota * out[2] - out[0]),
                               mu * (iota * iota * out[3] - out[1]));
      };
      sol.homogeneous_bc = true;
      return sol;
    }
    case 2: {
      const double alpha = 1.5;
      const double omega = 3.0 * M_PI / 4.0;
      const double C1 = -std::cos((alpha + 1) * omega) / std::cos((alpha - 1) * omega);
      const double C2 = 2 * (lambda + 2 * mu) / (lambda + mu);
      sol.u = [mu, C1, C2](double x, double y) {
        double out[12];
        gen::example2_fields(x, y, mu, C1, C2, out);
        return unpack_value(out);
      };
      // At the corner the closed forms produce 0 * inf = NaN; the true limits
      // of grad u (~ r^{1/2}) and div u vanish. The Hessian diverges there but
      // is never sampled at the corner itself (quadrature nodes are interior).
      const auto at_corner = [](double x, double y) { return x == 0.0 && y == 0.0; };
      sol.grad_u = [mu, C1, C2, at_corner](double x, double y) {
        if (at_corner(x, y)) return Eigen::Matrix2d::Zero().eval();
        double out[12];
        gen::example2_fields(x, y, mu, C1, C2, out);
        return unpack_grad(out);
      };
      sol.hess_u = [mu, C1, C2, at_corner](double x, double y) {
        if (at_corner(x, y)) return Eigen::Matrix<double, 2, 3>::Zero().eval();
        double out[12];
        gen::example2_fields(x, y, mu, C1, C2, out);
        return unpack_hess(out);
      };
      sol.div_u = [mu, C1, C2, at_corner](double x, double y) {
        if (at_corner(x, y)) return 0.0;
        double out[1];
        gen::example2_divergence(x, y, mu, C1, C2, out);
        return out[0];
      };
      const auto div_fn = sol.div_u;
      sol.p = [lambda, div_fn](double x, double y) { return lambda * div_fn(x, y); };
      sol.f = [](double, double) { return Eigen::Vector2d::Zero().eval(); };
      sol.singular = true;
      sol.singular_point = {0.0, 0.0};
      sol.homogeneous_bc = false;
      return sol;
    }
    case 3: {
      sol.u = [](double x, double y) {
        double out[12];
        gen::example3_fields(x, y, out);
        return unpack_value(out);
      };
      sol.grad_u = [](double x, double y) {
        double out[12];
        gen::example3_fields(x, y, out);
        return unpack_grad(out);
      };
      sol.hess_u = [](double x, double y) {
        double out[12];
        gen::example3_fields(x, y, out);
        return unpack_hess(out);
      };
      sol.div_u = [](double, double) { return 0.0; };
      sol.p = [](double, double) { return 0.0; };
      // The reference field solves the second-order limit problem -Lu0 = f;
      // with div u0 = 0 this is -mu lap u0.
      sol.f = [mu](double x, double y) {
        double out[2];
        gen::example3_laplacians(x, y, out);
        return Eigen::Vector2d(-mu * out[0], -mu * out[1]);
      };
      sol.homogeneous_bc = true;
      return sol;
    }
    default:
      throw ParameterError("example_solution: example must be 1, 2, or 3");
  }
}

}  // namespace sgfem
