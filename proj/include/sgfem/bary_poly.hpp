#pragma once

#include <array>
#include <map>

#include "sgfem/rational.hpp"

namespace sgfem {

/// Polynomial in the three barycentric coordinates (l1, l2, l3) with exact
/// rational coefficients. Exponents are nonnegative; zero coefficients are
/// never stored. Representation is formal: two polynomials that differ by a
/// multiple of (l1+l2+l3-1) describe the same function on a triangle; use
/// canonical() / same_function() to compare as functions.
class BaryPoly {
 public:
  using Exponent = std::array<int, 3>;
  using TermMap = std::map<Exponent, Rational>;

  BaryPoly() = default;

  static BaryPoly constant(const Rational& c);
  /// The barycentric coordinate l_i, i in 0..2.
  static BaryPoly lambda(int i);
  /// Element bubble b_K = l1*l2*l3.
  static BaryPoly bubble();
  /// Edge bubble b_i = b_K / l_i (product of the two other coordinates).
  static BaryPoly edge_bubble(int i);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  BaryPoly operator+(const BaryPoly& o) const;
  BaryPoly operator-(const BaryPoly& o) const;
  BaryPoly operator*(const BaryPoly& o) const;
  BaryPoly operator*(const Rational& c) const;
  BaryPoly operator-() const;
  BaryPoly pow(int n) const;

  /// Formal partial derivative with respect to l_i.
  BaryPoly derivative(int i) const;

  double eval(double l1, double l2, double l3) const;
  Rational eval_rational(const Rational& l1, const Rational& l2, const Rational& l3) const;

  /// Substitute l3 = 1 - l1 - l2; the result has zero exponent in l3.
  BaryPoly canonical() const;
  /// Equality as functions on the plane l1+l2+l3 = 1 (exact).
  bool same_function(const BaryPoly& o) const;
  bool operator==(const BaryPoly& o) const { return terms_ == o.terms_; }

  /// Largest rational g > 0 such that p/g has coprime integer coefficients;
  /// zero polynomial yields 0.
  Rational content() const;

  void add_term(const Exponent& e, const Rational& c);

  // Hidden friend: keeps mixed Rational expressions terse without exposing
  // the operator to unrelated overload resolutions in this namespace.
  friend BaryPoly operator*(const Rational& c, const BaryPoly& p) { return p * c; }

 private:
  TermMap terms_;
};

}  // namespace sgfem
