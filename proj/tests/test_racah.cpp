#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trijac/errors.hpp"
#include "trijac/racah.hpp"

using namespace trijac;

namespace {

const Rational A0 = make_rational(2, 7), B0 = make_rational(3, 5), G0 = make_rational(1, 3),
               D0 = make_rational(5, 11);

RacahParams<Rational> truncated(TruncationCase tc, int N) {
  Rational al = A0, be = B0, ga = G0, de = D0;
  if (tc == TruncationCase::AlphaCase) al = -N - 1;
  if (tc == TruncationCase::BetaDeltaCase) be = -N - 1 - de;
  if (tc == TruncationCase::GammaCase) ga = -N - 1;
  return RacahParams<Rational>::make(al, be, ga, de, N);
}

constexpr TruncationCase kCases[] = {TruncationCase::AlphaCase, TruncationCase::BetaDeltaCase,
                                     TruncationCase::GammaCase};

}  // namespace

TEST_CASE("truncation detection") {
  CHECK(truncated(TruncationCase::AlphaCase, 3).truncation == TruncationCase::AlphaCase);
  CHECK(truncated(TruncationCase::BetaDeltaCase, 3).truncation == TruncationCase::BetaDeltaCase);
  CHECK(truncated(TruncationCase::GammaCase, 3).truncation == TruncationCase::GammaCase);
  CHECK_THROWS_AS(RacahParams<Rational>::make(A0, B0, G0, D0, 3), InvalidParameters);
  // Two conditions at once.
  CHECK_THROWS_AS(RacahParams<Rational>::make(Rational(-4), B0, Rational(-4), D0, 3), InvalidParameters);
}

TEST_CASE("R_0 = 1 and R_m(lambda(0)) = 1") {
  const auto rp = truncated(TruncationCase::GammaCase, 5);
  for (int l = 0; l <= 5; ++l) CHECK(racah_eval(0, l, rp) == 1);
  for (int m = 0; m <= 5; ++m) CHECK(racah_eval(m, 0, rp) == 1);
}

TEST_CASE("duality exchanges degree and lattice variable") {
  for (TruncationCase tc : kCases)
    for (int N = 1; N <= 5; ++N) {
      const auto rp = truncated(tc, N);
      const auto dual = rp.dual();
      for (int m = 0; m <= N; ++m)
        for (int l = 0; l <= N; ++l) CHECK(racah_eval(m, l, rp) == racah_eval(l, m, dual));
    }
}

TEST_CASE("weighted orthogonality is exact") {
  for (TruncationCase tc : kCases)
    for (int N = 0; N <= 6; ++N) {
      const auto rp = truncated(tc, N);
      for (int m = 0; m <= N; ++m)
        for (int m2 = 0; m2 <= N; ++m2) {
          Rational s = 0;
          for (int l = 0; l <= N; ++l)
            s += racah_weight(l, rp) * racah_eval(m, l, rp) * racah_eval(m2, l, rp);
          CHECK(s == (m == m2 ? racah_norm(m, rp) : Rational(0)));
        }
    }
}

TEST_CASE("dual weight equals K / M_m") {
  for (TruncationCase tc : kCases)
    for (int N = 0; N <= 5; ++N) {
      const auto rp = truncated(tc, N);
      for (int m = 0; m <= N; ++m)
        CHECK(racah_weight(m, rp.dual()) == racah_K(rp) / racah_norm(m, rp));
    }
}

TEST_CASE("recurrence and difference equation are exact") {
  for (TruncationCase tc : kCases)
    for (int N = 1; N <= 6; ++N) {
      const auto rp = truncated(tc, N);
      for (int m = 0; m <= N; ++m)
        for (int l = 0; l <= N; ++l) {
          const auto rc = racah_recurrence(m, rp);
          Rational rhs = -(rc.A + rc.C) * racah_eval(m, l, rp);
          if (m < N) rhs += rc.A * racah_eval(m + 1, l, rp);
          if (m > 0) rhs += rc.C * racah_eval(m - 1, l, rp);
          CHECK(racah_lambda(l, rp) * racah_eval(m, l, rp) == rhs);

          const auto df = racah_difference(l, rp);
          Rational lhs = -(df.B + df.D) * racah_eval(m, l, rp);
          if (l < N) lhs += df.B * racah_eval(m, l + 1, rp);
          if (l > 0) lhs += df.D * racah_eval(m, l - 1, rp);
          CHECK(lhs == Rational(m) * (m + rp.alpha + rp.beta + 1) * racah_eval(m, l, rp));
        }
      CHECK(racah_recurrence(N, rp).A == 0);
      CHECK(racah_difference(N, rp).B == 0);
    }
}

TEST_CASE("alternate C_m denominator breaks the recurrence") {
  const auto rp = truncated(TruncationCase::GammaCase, 4);
  std::size_t mismatches = 0;
  for (int m = 1; m <= 4; ++m)
    for (int l = 0; l <= 4; ++l) {
      const auto rc = racah_recurrence(m, rp);
      const Rational C = racah_recurrence_C_alternate(m, rp);
      Rational rhs = -(rc.A + C) * racah_eval(m, l, rp) + C * racah_eval(m - 1, l, rp);
      if (m < 4) rhs += rc.A * racah_eval(m + 1, l, rp);
      if (racah_lambda(l, rp) * racah_eval(m, l, rp) != rhs) ++mismatches;
    }
  CHECK(mismatches > 0);
}

TEST_CASE("difference realization satisfies the Racah algebra") {
  for (TruncationCase tc : kCases)
    for (int N = 1; N <= 6; ++N) {
      const auto rp = truncated(tc, N);
      const auto [K1, K2] = racah_realization(rp);
      const auto [r1, r2] = racah_relation_residuals(K1, K2, racah_structure(rp), RMatrix::identity(N + 1));
      CHECK(r1.is_zero());
      CHECK(r2.is_zero());
    }
}

TEST_CASE("orthonormal functions: exact squares sum to one, double matrix orthogonal") {
  // Positive-weight regime of the pi <- e connection at (a,b,c) = (1/2, 3/10, 17/10).
  const Rational a = make_rational(1, 2), b = make_rational(3, 10), c = make_rational(17, 10);
  for (int n = 0; n <= 6; ++n) {
    const auto rp = RacahParams<Rational>::make(b, c, Rational(-n - 1), n + 1 + a + b, n);
    const auto rd = RacahParams<double>::make(b.get_d(), c.get_d(), -n - 1.0, Rational(n + 1 + a + b).get_d(), n);
    for (int m = 0; m <= n; ++m) {
      Rational s = 0;
      for (int l = 0; l <= n; ++l) s += racah_orthonormal_squared(m, l, rp);
      CHECK(s == 1);
      for (int m2 = 0; m2 <= n; ++m2) {
        double d = 0.0;
        for (int l = 0; l <= n; ++l) {
          const auto v1 = racah_orthonormal(m, l, rd);
          const auto v2 = racah_orthonormal(m2, l, rd);
          CHECK_FALSE(v1.negative_ratio);
          d += v1.value * v2.value;
        }
        CHECK(std::abs(d - (m == m2 ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("double and rational evaluation agree") {
  const auto rp = truncated(TruncationCase::BetaDeltaCase, 5);
  const auto rd = RacahParams<double>::make(rp.alpha.get_d(), rp.beta.get_d(), rp.gamma.get_d(),
                                            rp.delta.get_d(), 5);
  for (int m = 0; m <= 5; ++m)
    for (int l = 0; l <= 5; ++l)
      CHECK(racah_eval(m, l, rd) == doctest::Approx(racah_eval(m, l, rp).get_d()).epsilon(1e-10));
}
