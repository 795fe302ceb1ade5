#pragma once
// Differential operators sum_{(i,j)} p_ij(x,y) d^i/dx^i d^j/dy^j in normal
// form (coefficients left of derivatives), with exact composition.

#include <map>
#include <string>

#include "trijac/poly.hpp"

namespace trijac {

class PolyDiffOp {
 public:
  // Key: derivative orders (dx, dy) stored in Mono{i=dx, j=dy}.
  using Terms = std::map<Mono, BivarPoly>;

  PolyDiffOp() = default;
  static PolyDiffOp identity();
  static PolyDiffOp scalar(const Rational& s);
  // Multiplication operator by p.
  static PolyDiffOp multiply(const BivarPoly& p);
  // p * d^dx/dx^dx d^dy/dy^dy
  static PolyDiffOp term(int dx, int dy, const BivarPoly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total number of nonzero monomials over all coefficients.
  std::size_t monomial_count() const;
  void add_term(int dx, int dy, const BivarPoly& p);

  PolyDiffOp& operator+=(const PolyDiffOp& o);
  PolyDiffOp& operator-=(const PolyDiffOp& o);
  PolyDiffOp& operator*=(const Rational& s);
  friend PolyDiffOp operator+(PolyDiffOp a, const PolyDiffOp& b) { return a += b; }
  friend PolyDiffOp operator-(PolyDiffOp a, const PolyDiffOp& b) { return a -= b; }
  friend PolyDiffOp operator-(PolyDiffOp a) { return a *= Rational(-1); }
  friend PolyDiffOp operator*(PolyDiffOp a, const Rational& s) { return a *= s; }
  friend PolyDiffOp operator*(const Rational& s, PolyDiffOp a) { return a *= s; }
  // Composition A∘B in normal form (Leibniz rule).
  friend PolyDiffOp operator*(const PolyDiffOp& a, const PolyDiffOp& b);
  friend bool operator==(const PolyDiffOp& a, const PolyDiffOp& b) { return a.terms_ == b.terms_; }

  BivarPoly apply(const BivarPoly& f) const;
  std::string str() const;

 private:
  Terms terms_;
};

PolyDiffOp commutator(const PolyDiffOp& a, const PolyDiffOp& b);
PolyDiffOp anticommutator(const PolyDiffOp& a, const PolyDiffOp& b);

}  // namespace trijac
