#include "trijac/jacobi1d.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "trijac/errors.hpp"
#include "trijac/hyper.hpp"

namespace trijac {

namespace {

template <Scalar T>
T factorial(int n) {
  T f = from_int<T>(1);
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

// Forward three-term recurrence; nullopt when a coefficient degenerates.
std::optional<double> eval_by_recurrence(int n, const Jacobi1DParams<double>& p, double x) {
  const double s = p.a + p.b;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = (p.a + 1.0) - (s + 2.0) * x;
  for (int m = 1; m < n; ++m) {
    const double d0 = s + 2 * m, d1 = d0 + 1, d2 = d0 + 2;
    const double cplus = 2.0 * (m + 1) * (s + m + 1) / (d1 * d2);
    if (d0 == 0.0 || d1 == 0.0 || d2 == 0.0 || cplus == 0.0) return std::nullopt;
    const double czero = -(p.a - p.b) * s / (d0 * d2);
    const double cminus = 2.0 * (p.a + m) * (p.b + m) / (d0 * d1);
    const double next = ((1.0 - 2.0 * x - czero) * cur - cminus * prev) / cplus;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

template <Scalar T>
T jacobi1d_eval(int n, const Jacobi1DParams<T>& p, const T& x) {
  // The power series cancels badly in floating point; the recurrence does not.
  if constexpr (!is_exact_v<T>) {
    if (auto v = eval_by_recurrence(n, p, x)) return *v;
  }
  T pre = pochhammer(T(p.a + 1), n) / factorial<T>(n);
  std::vector<T> upper{from_int<T>(-n), T(p.a + p.b + (n + 1))};
  std::vector<T> lower{T(p.a + 1)};
  return pre * hyp_terminating(upper, lower, x, n + 1);
}

template <Scalar T>
std::vector<T> jacobi1d_coeffs(int n, const Jacobi1DParams<T>& p) {
  std::vector<T> c(static_cast<std::size_t>(n + 1));
  // term_j = (a+1)_n/n! * (-n)_j (n+a+b+1)_j / ((a+1)_j j!)
  T term = pochhammer(T(p.a + 1), n) / factorial<T>(n);
  c[0] = term;
  for (int j = 0; j < n; ++j) {
    T den = T(p.a + 1 + j) * (j + 1);
    if (is_zero(den))
      throw DegenerateLowerParameter("lower parameter a+1 hits a nonpositive integer");
    term *= T(from_int<T>(j - n) * T(p.a + p.b + (n + 1 + j)));
    term /= den;
    c[j + 1] = term;
  }
  return c;
}

BivarPoly jacobi1d_poly(int n, const Jacobi1DParams<Rational>& p) {
  return BivarPoly::univariate_x(jacobi1d_coeffs(n, p));
}

template <Scalar T>
T jacobi1d_norm(int n, const Jacobi1DParams<T>& p) {
  const T one = from_int<T>(1);
  if (n == 0) {
    // (a+b+1) Gamma(a+b+1) = Gamma(a+b+2) avoids 0 * inf at a+b = -1.
    return gamma_ratio<T>({T(p.a + one), T(p.b + one)}, {T(p.a + p.b + 2)});
  }
  T den = T(p.a + p.b + (2 * n + 1));
  if (is_zero(den)) throw DegenerateDenominator("2n+a+b+1 vanishes");
  return gamma_ratio<T>({T(p.a + (n + 1)), T(p.b + (n + 1))},
                        {T(p.a + p.b + (n + 1)), from_int<T>(n + 1)}) /
         den;
}

template <Scalar T>
T jacobi1d_norm_ratio(int n, int m, const Jacobi1DParams<T>& p) {
  if (n == m) return from_int<T>(1);
  if (n < m) return from_int<T>(1) / jacobi1d_norm_ratio(m, n, p);
  // N_n/N_m = (m+a+1)_d (m+b+1)_d / ((m+a+b+1)_d (m+1)_d) * (2m+a+b+1)/(2n+a+b+1).
  // At m = 0 the factor (a+b+1)_d (2m+a+b+1)^{-1} is read as (a+b+2)_{d-1}.
  const int d = n - m;
  T num = pochhammer(T(p.a + (m + 1)), d) * pochhammer(T(p.b + (m + 1)), d);
  T den = pochhammer(from_int<T>(m + 1), d) * T(p.a + p.b + (2 * n + 1));
  if (m == 0) {
    den *= pochhammer(T(p.a + p.b + 2), d - 1);
  } else {
    num *= T(p.a + p.b + (2 * m + 1));
    den *= pochhammer(T(p.a + p.b + (m + 1)), d);
  }
  if (is_zero(den)) throw DegenerateDenominator("norm ratio denominator vanishes");
  return num / den;
}

PolyDiffOp jacobi1d_diffop(const Jacobi1DParams<Rational>& p) {
  BivarPoly x = BivarPoly::x();
  BivarPoly one(Rational(1));
  PolyDiffOp op = PolyDiffOp::term(2, 0, x * (one - x));
  op += PolyDiffOp::term(1, 0, BivarPoly(Rational(p.a + 1)) - x * Rational(p.a + p.b + 2));
  return op;
}

template <Scalar T>
RecurrenceCoeffs<T> jacobi1d_recurrence(int n, const Jacobi1DParams<T>& p) {
  const T s = p.a + p.b;
  T d0 = s + 2 * n, d1 = s + (2 * n + 1), d2 = s + (2 * n + 2);
  if (is_zero(d0) || is_zero(d1) || is_zero(d2))
    throw DegenerateDenominator("Jacobi recurrence denominator vanishes at n=" + std::to_string(n));
  RecurrenceCoeffs<T> r;
  r.cPlus = T(2 * (n + 1) * T(s + (n + 1))) / T(d1 * d2);
  r.cZero = -T(T(p.a - p.b) * s) / T(d0 * d2);
  r.cMinus = T(2 * T(p.a + n) * T(p.b + n)) / T(d0 * d1);
  return r;
}

template <Scalar T>
bool jacobi1d_reflect_check(int n, const Jacobi1DParams<T>& p, const T& x) {
  T lhs = jacobi1d_eval(n, p, T(1 - x));
  T rhs = sign_power<T>(n) * jacobi1d_eval(n, Jacobi1DParams<T>{p.b, p.a}, x);
  if constexpr (is_exact_v<T>) {
    return lhs == rhs;
  } else {
    return std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs));
  }
}

bool jacobi1d_reflect_poly_check(int n, const Jacobi1DParams<Rational>& p) {
  BivarPoly lhs = jacobi1d_poly(n, p).substitute(BivarPoly(Rational(1)) - BivarPoly::x(),
                                                 BivarPoly::y());
  BivarPoly rhs = jacobi1d_poly(n, {p.b, p.a}) * sign_power<Rational>(n);
  return lhs == rhs;
}

#define TRIJAC_INSTANTIATE(T)                                                        \
  template T jacobi1d_eval<T>(int, const Jacobi1DParams<T>&, const T&);              \
  template std::vector<T> jacobi1d_coeffs<T>(int, const Jacobi1DParams<T>&);         \
  template T jacobi1d_norm<T>(int, const Jacobi1DParams<T>&);                        \
  template T jacobi1d_norm_ratio<T>(int, int, const Jacobi1DParams<T>&);             \
  template RecurrenceCoeffs<T> jacobi1d_recurrence<T>(int, const Jacobi1DParams<T>&); \
  template bool jacobi1d_reflect_check<T>(int, const Jacobi1DParams<T>&, const T&);
TRIJAC_INSTANTIATE(double)
TRIJAC_INSTANTIATE(Rational)
#undef TRIJAC_INSTANTIATE

}  // namespace trijac
