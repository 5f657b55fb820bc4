#include "sgfem/jacobi.hpp"

#include "sgfem/errors.hpp"

namespace sgfem {

double UniPoly::eval(double t) const {
  double s = 0.0;
  for (int k = degree(); k >= 0; --k) s = s * t + to_double(c[static_cast<size_t>(k)]);
  return s;
}

Rational UniPoly::eval_rational(const Rational& t) const {
  Rational s = 0;
  for (int k = degree(); k >= 0; --k) s = s * t + c[static_cast<size_t>(k)];
  return s;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * static_cast<int>(k));
  return d;
}

namespace {

UniPoly uni_constant(const Rational& v) { return UniPoly{{v}}; }

UniPoly axpy(const Rational& a0, const Rational& a1, const UniPoly& p,
             const Rational& b, const UniPoly& q) {
  // (a0 + a1 t) * p + b * q
  UniPoly r;
  r.c.assign(static_cast<size_t>(std::max(p.degree() + 2, q.degree() + 1)), Rational(0));
  for (size_t k = 0; k < p.c.size(); ++k) {
    r.c[k] += a0 * p.c[k];
    r.c[k + 1] += a1 * p.c[k];
  }
  for (size_t k = 0; k < q.c.size(); ++k) r.c[k] += b * q.c[k];
  while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
  if (r.c.empty()) r.c.push_back(Rational(0));
  return r;
}

}  // namespace

UniPoly jacobi_1d(int n, const Rational& alpha, const Rational& beta) {
  if (n < 0) throw ParameterError("jacobi_1d: n must be nonnegative");
  if (alpha <= -1 || beta <= -1) throw ParameterError("jacobi_1d: parameters must exceed -1");
  if (n == 0) return uni_constant(1);
  UniPoly p0 = uni_constant(1);
  UniPoly p1{{(alpha - beta) / 2, (alpha + beta + 2) / 2}};
  if (n == 1) return p1;
  for (int m = 2; m <= n; ++m) {
    Rational ab = alpha + beta;
    Rational c = 2 * m * (m + ab) * (2 * m + ab - 2);
    Rational a1 = (2 * m + ab - 1) * (2 * m + ab) * (2 * m + ab - 2) / c;
    Rational a0 = (2 * m + ab - 1) * (alpha * alpha - beta * beta) / c;
    Rational b = -2 * (m + alpha - 1) * (m + beta - 1) * (2 * m + ab) / c;
    UniPoly pm = axpy(a0, a1, p1, b, p0);
    p0 = std::move(p1);
    p1 = std::move(pm);
  }
  return p1;
}

Rational jacobi_norm_1d(int n, int alpha, int beta) {
  if (n < 0 || alpha <= -1 || beta <= -1)
    throw ParameterError("jacobi_norm_1d: invalid parameters");
  // 2^{a+b+1}/(2n+a+b+1) * (n+a)! (n+b)! / ((n+a+b)! n!)
  Rational r = pow2(alpha + beta + 1) / (2 * n + alpha + beta + 1);
  r *= Rational(factorial(n + alpha) * factorial(n + beta),
                factorial(n + alpha + beta) * factorial(n));
  return r;
}

BaryPoly jacobi_tri(int k, int n, const Rational& alpha, const Rational& beta,
                    const Rational& gamma) {
  if (k < 0 || k > n) throw ParameterError("jacobi_tri: need 0 <= k <= n");
  if (alpha <= -1 || beta <= -1 || gamma <= -1)
    throw ParameterError("jacobi_tri: parameters must exceed -1");
  const BaryPoly l1 = BaryPoly::lambda(0);
  const BaryPoly l2 = BaryPoly::lambda(1);
  const BaryPoly l3 = BaryPoly::lambda(2);

  // First factor: P_{n-k}^{(2k+beta+gamma+1, alpha)}(l1 - l2 - l3).
  UniPoly p_outer = jacobi_1d(n - k, 2 * k + beta + gamma + 1, alpha);
  BaryPoly t = l1 - l2 - l3;
  BaryPoly first;
  BaryPoly tpow = BaryPoly::constant(1);
  for (size_t j = 0; j < p_outer.c.size(); ++j) {
    first = first + tpow * p_outer.c[j];
    tpow = tpow * t;
  }

  // Second factor with the rational argument cleared:
  // (l2+l3)^k P_k^{(gamma,beta)}((l2-l3)/(l2+l3)) = sum c_j (l2-l3)^j (l2+l3)^{k-j}.
  UniPoly p_inner = jacobi_1d(k, gamma, beta);
  BaryPoly u = l2 - l3;
  BaryPoly v = l2 + l3;
  BaryPoly second;
  for (size_t j = 0; j < p_inner.c.size(); ++j)
    second = second + u.pow(static_cast<int>(j)) * v.pow(k - static_cast<int>(j)) * p_inner.c[j];

  return first * second;
}

Rational jacobi_norm_tri(int k, int n, int alpha, int beta, int gamma) {
  if (k < 0 || k > n) throw ParameterError("jacobi_norm_tri: need 0 <= k <= n");
  return pow2(-(2 * k + alpha + 2 * beta + 2 * gamma + 3)) *
         jacobi_norm_1d(n - k, 2 * k + beta + gamma + 1, alpha) *
         jacobi_norm_1d(k, gamma, beta);
}

}  // namespace sgfem
