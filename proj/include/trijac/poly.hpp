#pragma once
// Bivariate polynomials with exact rational coefficients.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "trijac/scalar.hpp"

namespace trijac {

struct Mono {
  int i = 0;  // power of x
  int j = 0;  // power of y
  auto operator<=>(const Mono&) const = default;
};

class BivarPoly {
 public:
  using Terms = std::map<Mono, Rational>;

  BivarPoly() = default;
  explicit BivarPoly(const Rational& constant);
  static BivarPoly monomial(int i, int j, const Rational& coef = 1);
  static BivarPoly x() { return monomial(1, 0); }
  static BivarPoly y() { return monomial(0, 1); }
  // sum_j coeffs[j] x^j
  static BivarPoly univariate_x(const std::vector<Rational>& coeffs);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // -1 for the zero polynomial.
  int total_degree() const;
  Rational coeff(int i, int j) const;
  void add_term(int i, int j, const Rational& c);

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const Rational& s);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator-(BivarPoly a) { return a *= Rational(-1); }
  friend BivarPoly operator*(BivarPoly a, const Rational& s) { return a *= s; }
  friend BivarPoly operator*(const Rational& s, BivarPoly a) { return a *= s; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  BivarPoly pow(int e) const;
  // d^dx/dx^dx d^dy/dy^dy
  BivarPoly derivative(int dx, int dy) const;
  // p(px(x,y), py(x,y))
  BivarPoly substitute(const BivarPoly& px, const BivarPoly& py) const;
  // Part of exact total degree d.
  BivarPoly homogeneous_part(int d) const;

  template <Scalar T>
  T evaluate(const T& x, const T& y) const;

  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace trijac
