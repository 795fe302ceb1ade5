#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trijac/errors.hpp"
#include "trijac/jacobi1d.hpp"
#include "trijac/quadrature.hpp"

using namespace trijac;

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// int_0^1 p(x) x^a (1-x)^b dx for integer a, b via Beta moments.
Rational beta_integral(const std::vector<Rational>& coeffs, int a, int b) {
  Rational s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int ia = static_cast<int>(i) + a;
    s += coeffs[i] * factorial(ia) * factorial(b) / factorial(ia + b + 1);
  }
  return s;
}

std::vector<Rational> square(const std::vector<Rational>& c) {
  std::vector<Rational> out(2 * c.size() - 1);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out[i + j] += c[i] * c[j];
  return out;
}

}  // namespace

TEST_CASE("low degrees in closed form") {
  const Jacobi1DParams<Rational> p{make_rational(1, 3), make_rational(5, 2)};
  CHECK(jacobi1d_eval(0, p, make_rational(1, 7)) == 1);
  const Rational x = make_rational(2, 9);
  CHECK(jacobi1d_eval(1, p, x) == (p.a + 1) - (p.a + p.b + 2) * x);
}

TEST_CASE("Legendre case matches shifted Legendre polynomials") {
  const Jacobi1DParams<double> p{0.0, 0.0};
  for (int n = 0; n <= 10; ++n)
    for (double x : {0.0, 0.13, 0.5, 0.77, 1.0})
      CHECK(jacobi1d_eval(n, p, x) == doctest::Approx(std::legendre(n, 1.0 - 2.0 * x)).epsilon(1e-12));
}

TEST_CASE("norm equals the exact weighted integral for integer parameters") {
  for (auto [a, b] : {std::pair{0, 0}, std::pair{1, 2}, std::pair{3, 1}}) {
    const Jacobi1DParams<Rational> p{Rational(a), Rational(b)};
    for (int n = 0; n <= 6; ++n) {
      const Rational integral = beta_integral(square(jacobi1d_coeffs(n, p)), a, b);
      CHECK(jacobi1d_norm(n, p) == integral);
    }
  }
}

TEST_CASE("orthogonality by Gauss-Jacobi quadrature") {
  const Jacobi1DParams<double> p{0.4, 1.7};
  const QuadratureRule q = gauss_jacobi_01(12, p.a, p.b);
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i)
        s += q.weights[i] * jacobi1d_eval(n, p, q.nodes[i].x) * jacobi1d_eval(m, p, q.nodes[i].x);
      const double normalized = s / std::sqrt(jacobi1d_norm(n, p) * jacobi1d_norm(m, p));
      CHECK(std::abs(normalized - (n == m ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("norm ratio agrees with the Gamma form") {
  const Jacobi1DParams<double> p{0.4, 1.7};
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m)
      CHECK(jacobi1d_norm_ratio(n, m, p) ==
            doctest::Approx(jacobi1d_norm(n, p) / jacobi1d_norm(m, p)).epsilon(1e-12));
  const Jacobi1DParams<Rational> q{make_rational(1, 3), make_rational(2, 5)};
  CHECK(jacobi1d_norm_ratio(3, 3, q) == 1);
}

TEST_CASE("differential equation and recurrence are exact") {
  const Jacobi1DParams<Rational> p{make_rational(-1, 3), make_rational(7, 4)};
  const PolyDiffOp H = jacobi1d_diffop(p);
  const BivarPoly x = BivarPoly::x();
  for (int n = 0; n <= 8; ++n) {
    const BivarPoly J = jacobi1d_poly(n, p);
    CHECK((H.apply(J) + J * Rational(n * (n + p.a + p.b + 1))).is_zero());
    if (n >= 1) {
      const auto rc = jacobi1d_recurrence(n, p);
      const BivarPoly lhs = (BivarPoly(Rational(1)) - x * Rational(2)) * J;
      const BivarPoly rhs = jacobi1d_poly(n + 1, p) * rc.cPlus + J * rc.cZero +
                            jacobi1d_poly(n - 1, p) * rc.cMinus;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("reflection symmetry") {
  const Jacobi1DParams<Rational> p{make_rational(3, 8), make_rational(1, 6)};
  for (int n = 0; n <= 7; ++n) {
    CHECK(jacobi1d_reflect_poly_check(n, p));
    CHECK(jacobi1d_reflect_check(n, p, make_rational(2, 11)));
    CHECK(jacobi1d_reflect_check(n, Jacobi1DParams<double>{0.375, 1.0 / 6}, 0.3));
  }
}

TEST_CASE("degenerate recurrence denominator") {
  const Jacobi1DParams<Rational> p{make_rational(-3, 2), make_rational(-3, 2)};
  CHECK_THROWS_AS(jacobi1d_recurrence(1, p), DegenerateDenominator);
}
