#pragma once

#include <vector>

#include "sgfem/bary_poly.hpp"
#include "sgfem/rational.hpp"

namespace sgfem {

/// Univariate polynomial with exact rational coefficients, c[k] * t^k.
struct UniPoly {
  std::vector<Rational> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  double eval(double t) const;
  Rational eval_rational(const Rational& t) const;
  UniPoly derivative() const;
};

/// Jacobi polynomial P_n^{(alpha,beta)}, orthogonal on [-1,1] under the
/// weight (1-t)^alpha (1+t)^beta. Three-term recurrence for n >= 2.
UniPoly jacobi_1d(int n, const Rational& alpha, const Rational& beta);

/// Weighted square norm h_n^{(alpha,beta)} (integer parameters >= 0).
Rational jacobi_norm_1d(int n, int alpha, int beta);

/// Jacobi polynomial on the triangle, degree n, expressed in barycentric
/// coordinates with the (l2+l3)^k prefactor expanded symbolically so the
/// result is a genuine polynomial.
BaryPoly jacobi_tri(int k, int n, const Rational& alpha, const Rational& beta,
                    const Rational& gamma);

/// Triangle square norm h_{k,n}^{(alpha,beta,gamma)}; the mean-normalized
/// weighted integral of the square over a triangle equals 2*h.
Rational jacobi_norm_tri(int k, int n, int alpha, int beta, int gamma);

}  // namespace sgfem
