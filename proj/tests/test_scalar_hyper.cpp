#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trijac/hyper.hpp"

using namespace trijac;

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/10") == make_rational(3, 10));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.3") == make_rational(3, 10));
  CHECK(parse_rational("-1.25e1") == make_rational(-25, 2));
  CHECK(parse_rational("1e-3") == make_rational(1, 1000));
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(is_rational_literal("5/4"));
  CHECK_FALSE(is_rational_literal("0.5"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
  CHECK(to_string(make_rational(-3, 9)) == "-1/3");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(std::stod(to_string(0.1)) == 0.1);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(3), 0) == 1);
  CHECK(pochhammer(Rational(3), 4) == 3 * 4 * 5 * 6);
  CHECK(pochhammer(Rational(-2), 3) == 0);
  CHECK(pochhammer(make_rational(1, 2), 2) == make_rational(3, 4));
  CHECK(pochhammer(2.5, 3) == doctest::Approx(2.5 * 3.5 * 4.5));
}

TEST_CASE("Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n") {
  const Rational b = make_rational(2, 7), c = make_rational(9, 4);
  for (int n = 0; n <= 8; ++n) {
    const Rational lhs = hyp_terminating<Rational>({Rational(-n), b}, {c}, Rational(1), n + 1);
    CHECK(lhs == pochhammer(Rational(c - b), n) / pochhammer(c, n));
    const double lhsd = hyp_terminating<double>({-1.0 * n, 2.0 / 7}, {2.25}, 1.0, n + 1);
    CHECK(lhsd == doctest::Approx(to_double(lhs)).epsilon(1e-13));
  }
}

TEST_CASE("Pfaff-Saalschutz 3F2 at unit argument") {
  // 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
  const Rational a = make_rational(1, 3), b = make_rational(5, 2), c = make_rational(7, 5);
  for (int n = 0; n <= 6; ++n) {
    const Rational lhs = hyp_terminating<Rational>({Rational(-n), a, b},
                                                   {c, Rational(1 + a + b - c - n)}, Rational(1), n + 1);
    const Rational rhs = pochhammer(Rational(c - a), n) * pochhammer(Rational(c - b), n) /
                         (pochhammer(c, n) * pochhammer(Rational(c - a - b), n));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degenerate lower parameter") {
  CHECK_THROWS_AS(hyp_terminating<Rational>({Rational(-3)}, {Rational(-1)}, Rational(1), 4),
                  DegenerateLowerParameter);
  // The vanishing lower Pochhammer lies past the last term: fine.
  CHECK_NOTHROW(hyp_terminating<Rational>({Rational(-1)}, {Rational(-1)}, Rational(1), 2));
}

TEST_CASE("gamma ratios") {
  CHECK(gamma_ratio<double>({4.5, 2.25}, {1.5}) ==
        doctest::Approx(std::tgamma(4.5) * std::tgamma(2.25) / std::tgamma(1.5)).epsilon(1e-13));
  // Sign tracking for negative non-integers.
  CHECK(gamma_ratio<double>({-0.5}, {}) == doctest::Approx(std::tgamma(-0.5)).epsilon(1e-13));
  CHECK(gamma_ratio<double>({-1.5}, {}) == doctest::Approx(std::tgamma(-1.5)).epsilon(1e-13));

  const Rational h = make_rational(1, 3);
  CHECK(gamma_ratio<Rational>({Rational(h + 3)}, {h}) == pochhammer(h, 3));
  CHECK(gamma_ratio<Rational>({Rational(5)}, {Rational(2)}) == 24 / 1);
  CHECK(gamma_ratio<Rational>({Rational(5)}, {}) == 24);
  CHECK_THROWS_AS(gamma_ratio<Rational>({h}, {}), IrreducibleRatio);
  CHECK_THROWS_AS(gamma_ratio<Rational>({Rational(0)}, {}), PoleError);
  CHECK_THROWS_AS(gamma_ratio<double>({-2.0}, {}), PoleError);
}
