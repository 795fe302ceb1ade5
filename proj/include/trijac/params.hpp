#pragma once

#include <compare>

#include "trijac/scalar.hpp"

namespace trijac {

// Degree pair (n,k), 0 <= k <= n.
struct TriIndex {
  int n = 0;
  int k = 0;
  auto operator<=>(const TriIndex&) const = default;
};

template <Scalar T>
struct Jacobi1DParams {
  T a{};  // exponent of x
  T b{};  // exponent of 1-x
};

template <Scalar T>
struct TriParams {
  T a{};
  T b{};
  T c{};
  T sum() const { return a + b + c; }
};

inline TriParams<double> to_double(const TriParams<Rational>& p) {
  return {p.a.get_d(), p.b.get_d(), p.c.get_d()};
}

// Exact binary value of each double.
inline TriParams<Rational> to_rational(const TriParams<double>& p) {
  return {Rational(p.a), Rational(p.b), Rational(p.c)};
}

}  // namespace trijac
