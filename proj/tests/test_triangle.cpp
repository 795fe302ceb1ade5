#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trijac/errors.hpp"
#include "trijac/jacobi1d.hpp"
#include "trijac/triangle.hpp"

using namespace trijac;

namespace {

const TriParams<Rational> P{make_rational(1, 3), make_rational(2, 7), make_rational(5, 4)};

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Exact weighted integral over the triangle for integer exponents.
Rational triangle_integral(const BivarPoly& f, int a, int b, int c) {
  Rational s = 0;
  for (const auto& [mono, coef] : f.terms())
    s += coef * factorial(mono.i + a) * factorial(mono.j + b) * factorial(c) /
         factorial(mono.i + mono.j + a + b + c + 2);
  return s;
}

}  // namespace

TEST_CASE("definition as a product of univariate polynomials") {
  const Rational x = make_rational(1, 5), y = make_rational(3, 10);
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      const Rational u = 1 - x;
      Rational uk = 1;
      for (int i = 0; i < k; ++i) uk *= u;
      const Rational want = jacobi1d_eval(n - k, Jacobi1DParams<Rational>{P.a, Rational(P.b + P.c + 2 * k + 1)}, x) *
                            uk * jacobi1d_eval(k, Jacobi1DParams<Rational>{P.b, P.c}, Rational(y / u));
      CHECK(tri_eval({n, k}, P, x, y) == want);
      CHECK(tri_poly({n, k}, P).evaluate(x, y) == want);
      CHECK(tri_eval<double>({n, k}, to_double(P), 0.2, 0.3) ==
            doctest::Approx(want.get_d()).epsilon(1e-12));
    }
}

TEST_CASE("J_00 = 1 and the x = 1 vertex") {
  CHECK(tri_eval<double>({0, 0}, {0, 0, 0}, 0.2, 0.3) == 1.0);
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      const Rational v = tri_eval({n, k}, P, Rational(1), Rational(0));
      CHECK(v == tri_poly({n, k}, P).evaluate(Rational(1), Rational(0)));
      CHECK(tri_eval<double>({n, k}, to_double(P), 1.0, 0.0) == doctest::Approx(v.get_d()));
    }
}

TEST_CASE("norms equal the exact weighted integrals for integer exponents") {
  for (auto [a, b, c] : {std::tuple{0, 0, 0}, std::tuple{1, 2, 3}, std::tuple{2, 0, 1}}) {
    const TriParams<Rational> p{Rational(a), Rational(b), Rational(c)};
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        const BivarPoly J = tri_poly({n, k}, p);
        CHECK(tri_norm({n, k}, p) == triangle_integral(J * J, a, b, c));
        // Orthogonality against the previous basis element.
        if (k > 0) CHECK(triangle_integral(J * tri_poly({n, k - 1}, p), a, b, c) == 0);
        if (n > 0) CHECK(triangle_integral(J * tri_poly({n - 1, 0}, p), a, b, c) == 0);
      }
  }
}

TEST_CASE("norm ratios are exact for generic rational parameters") {
  const TriParams<double> pd = to_double(P);
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      const Rational r = tri_norm_ratio({n, k}, {2, 1}, P);
      CHECK(r.get_d() == doctest::Approx(tri_norm<double>({n, k}, pd) / tri_norm<double>({2, 1}, pd)).epsilon(1e-12));
    }
  CHECK_THROWS_AS(tri_norm({1, 0}, P), IrreducibleRatio);
}

TEST_CASE("weight") {
  const TriParams<double> p{1.0, 2.0, 0.5};
  CHECK(tri_weight(p, 0.2, 0.3) == doctest::Approx(0.2 * 0.09 * std::sqrt(0.5)));
  CHECK_THROWS_AS(tri_weight(p, 0.8, 0.5), DomainError);
  CHECK_THROWS_AS(tri_weight(p, -0.1, 0.5), DomainError);
  const double ov = tri_overlap({1, 1}, p, 0.2, 0.3);
  CHECK(ov == doctest::Approx(std::sqrt(tri_weight(p, 0.2, 0.3) / tri_norm<double>({1, 1}, p)) *
                              tri_eval<double>({1, 1}, p, 0.2, 0.3)));
}

TEST_CASE("dihedral group") {
  for (D3Element g : kD3Elements) {
    CHECK(d3_compose(D3Element::e, g) == g);
    CHECK(d3_compose(g, D3Element::e) == g);
    CHECK(d3_compose(g, d3_inverse(g)) == D3Element::e);
    CHECK(d3_parse(d3_name(g)) == g);
    for (D3Element h : kD3Elements)
      for (D3Element f : kD3Elements)
        CHECK(d3_compose(d3_compose(g, h), f) == d3_compose(g, d3_compose(h, f)));
  }
  CHECK(d3_compose(D3Element::rot2pi3, D3Element::rot2pi3) == D3Element::rot4pi3);
  CHECK(d3_compose(D3Element::pi, D3Element::sigma) == D3Element::rot2pi3);
  CHECK_FALSE(d3_parse("rho").has_value());
}

TEST_CASE("families by reduction equal families by substitution") {
  for (D3Element g : kD3Elements)
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k <= n; ++k) CHECK(tri_family_poly(g, {n, k}, P) == tri_action_poly(g, {n, k}, P));
}

TEST_CASE("tau family is (-1)^k times the e family") {
  const TriParams<double> p{1, 2, 3};
  CHECK(tri_family_eval<double>(D3Element::tau, {2, 1}, p, 0.2, 0.3) ==
        doctest::Approx(-tri_family_eval<double>(D3Element::e, {2, 1}, p, 0.2, 0.3)));
  CHECK(tri_family_eval<double>(D3Element::tau, {2, 2}, p, 0.2, 0.3) ==
        doctest::Approx(tri_family_eval<double>(D3Element::e, {2, 2}, p, 0.2, 0.3)));
}

TEST_CASE("pi family is the e family at (c,b,a) and (1-x-y, y)") {
  const TriParams<double> p{1, 2, 3};
  const double x = 0.15, y = 0.4;
  CHECK(tri_family_eval<double>(D3Element::pi, {1, 0}, p, x, y) ==
        doctest::Approx(tri_eval<double>({1, 0}, {3, 2, 1}, 1 - x - y, y)));
  CHECK(tri_family_norm<double>(D3Element::pi, {3, 1}, p) == doctest::Approx(tri_norm<double>({3, 1}, {3, 2, 1})));
  CHECK(tri_family_norm_ratio<Rational>(D3Element::sigma, {3, 1}, D3Element::e, {3, 2}, P).get_d() ==
        doctest::Approx(tri_family_norm<double>(D3Element::sigma, {3, 1}, to_double(P)) /
                        tri_norm<double>({3, 2}, to_double(P))));
}
