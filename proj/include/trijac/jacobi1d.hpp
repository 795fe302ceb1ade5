#pragma once
// Univariate Jacobi polynomials on [0,1]:
//   J_n^{(a,b)}(x) = (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; x),
// orthogonal for the weight x^a (1-x)^b.

#include <vector>

#include "trijac/diffop.hpp"
#include "trijac/params.hpp"

namespace trijac {

template <Scalar T>
struct RecurrenceCoeffs {
  T cPlus{};
  T cZero{};
  T cMinus{};
};

template <Scalar T>
T jacobi1d_eval(int n, const Jacobi1DParams<T>& p, const T& x);

// Power-basis coefficients c_0..c_n of J_n in x.
template <Scalar T>
std::vector<T> jacobi1d_coeffs(int n, const Jacobi1DParams<T>& p);

BivarPoly jacobi1d_poly(int n, const Jacobi1DParams<Rational>& p);

// Gamma(n+a+1) Gamma(n+b+1) / ((2n+a+b+1) n! Gamma(n+a+b+1)).
// Exact only when the Gamma ratio reduces (e.g. integer a, b).
template <Scalar T>
T jacobi1d_norm(int n, const Jacobi1DParams<T>& p);

// N_n / N_m with every Gamma reduced to Pochhammer products.
template <Scalar T>
T jacobi1d_norm_ratio(int n, int m, const Jacobi1DParams<T>& p);

// x(1-x) d^2/dx^2 + (a+1 - (a+b+2) x) d/dx
PolyDiffOp jacobi1d_diffop(const Jacobi1DParams<Rational>& p);

// (1-2x) J_n = cPlus J_{n+1} + cZero J_n + cMinus J_{n-1}, n >= 1.
template <Scalar T>
RecurrenceCoeffs<T> jacobi1d_recurrence(int n, const Jacobi1DParams<T>& p);

// J_n^{(a,b)}(1-x) == (-1)^n J_n^{(b,a)}(x) at a point (exact in rational mode,
// relative 1e-12 in double mode).
template <Scalar T>
bool jacobi1d_reflect_check(int n, const Jacobi1DParams<T>& p, const T& x);

// Coefficient-level version of the reflection identity.
bool jacobi1d_reflect_poly_check(int n, const Jacobi1DParams<Rational>& p);

}  // namespace trijac
