#include "sgfem/bary_poly.hpp"

#include <cmath>

#include "sgfem/errors.hpp"

namespace sgfem {

void BaryPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BaryPoly BaryPoly::constant(const Rational& c) {
  BaryPoly p;
  p.add_term({0, 0, 0}, c);
  return p;
}

BaryPoly BaryPoly::lambda(int i) {
  if (i < 0 || i > 2) throw ParameterError("BaryPoly::lambda: index out of range");
  BaryPoly p;
  Exponent e{0, 0, 0};
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

BaryPoly BaryPoly::bubble() {
  BaryPoly p;
  p.add_term({1, 1, 1}, 1);
  return p;
}

BaryPoly BaryPoly::edge_bubble(int i) {
  if (i < 0 || i > 2) throw ParameterError("BaryPoly::edge_bubble: index out of range");
  BaryPoly p;
  Exponent e{1, 1, 1};
  e[i] = 0;
  p.add_term(e, 1);
  return p;
}

int BaryPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

BaryPoly BaryPoly::operator+(const BaryPoly& o) const {
  BaryPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

BaryPoly BaryPoly::operator-(const BaryPoly& o) const {
  BaryPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

BaryPoly BaryPoly::operator-() const {
  BaryPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BaryPoly BaryPoly::operator*(const BaryPoly& o) const {
  BaryPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

BaryPoly BaryPoly::operator*(const Rational& c) const {
  BaryPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

BaryPoly BaryPoly::pow(int n) const {
  if (n < 0) throw ParameterError("BaryPoly::pow: negative exponent");
  BaryPoly r = constant(1);
  for (int i = 0; i < n; ++i) r = r * (*this);
  return r;
}

BaryPoly BaryPoly::derivative(int i) const {
  BaryPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    r.add_term(d, c * e[i]);
  }
  return r;
}

double BaryPoly::eval(double l1, double l2, double l3) const {
  double s = 0.0;
  const double l[3] = {l1, l2, l3};
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) t *= l[i];
    s += t;
  }
  return s;
}

Rational BaryPoly::eval_rational(const Rational& l1, const Rational& l2, const Rational& l3) const {
  Rational s = 0;
  const Rational l[3] = {l1, l2, l3};
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) t *= l[i];
    s += t;
  }
  return s;
}

BaryPoly BaryPoly::canonical() const {
  // (1 - l1 - l2)^k expanded once per needed power.
  BaryPoly one_minus = constant(1) - lambda(0) - lambda(1);
  std::map<int, BaryPoly> powers;
  powers[0] = constant(1);
  BaryPoly r;
  for (const auto& [e, c] : terms_) {
    int k = e[2];
    if (!powers.count(k)) {
      int known = powers.rbegin()->first;
      for (int j = known + 1; j <= k; ++j) powers[j] = powers[j - 1] * one_minus;
    }
    BaryPoly mono;
    mono.add_term({e[0], e[1], 0}, c);
    r = r + mono * powers[k];
  }
  return r;
}

bool BaryPoly::same_function(const BaryPoly& o) const {
  return canonical() == o.canonical();
}

Rational BaryPoly::content() const {
  Rational g = 0;
  for (const auto& [e, c] : terms_) g = rational_gcd(g, rational_abs(c));
  return g;
}

}  // namespace sgfem
