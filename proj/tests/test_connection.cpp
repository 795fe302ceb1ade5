#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trijac/connection.hpp"
#include "trijac/kernels.hpp"
#include "trijac/quadrature.hpp"

using namespace trijac;

namespace {

const TriParams<double> kPanel[] = {{0, 0, 0}, {1, 2, 3}, {0.5, 0.3, 1.7}, {-0.5, 2.5, -0.7}};

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

struct Pair {
  D3Element source, target;
};
const Pair kPairs[] = {{D3Element::e, D3Element::pi},
                       {D3Element::e, D3Element::sigma},
                       {D3Element::pi, D3Element::sigma}};

}  // namespace

TEST_CASE("degree zero") {
  for (const auto& pr : kPairs) CHECK(connection_matrix(pr.source, pr.target, 0, {1, 2, 3}).entries(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("orthogonal matrices and coherence") {
  for (const auto& p : kPanel)
    for (int n = 0; n <= 10; ++n) {
      const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n + 1, n + 1);
      for (const auto& pr : kPairs) {
        const Eigen::MatrixXd T = connection_matrix(pr.source, pr.target, n, p).entries;
        CHECK(max_abs(T.transpose() * T - I) < 1e-12);
      }
      const Eigen::MatrixXd lhs = connection_sigma(n, p).entries;
      const Eigen::MatrixXd rhs = connection_sigma_from_pi(n, p).entries * connection_pi(n, p).entries;
      CHECK(max_abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("parameter symmetries") {
  const TriParams<double> p{0.5, 0.3, 1.7};
  for (int n = 0; n <= 8; ++n) {
    // Exchanging a and c transposes pi <- e.
    const Eigen::MatrixXd A = connection_pi(n, {p.c, p.b, p.a}).entries;
    const Eigen::MatrixXd B = connection_pi(n, p).entries;
    CHECK(max_abs(A - B.transpose()) < 1e-12);
    // sigma <- e at (a,b,c) is a sign pattern of pi <- e at (a,c,b).
    const Eigen::MatrixXd S = connection_sigma(n, p).entries;
    const Eigen::MatrixXd P = connection_pi(n, {p.a, p.c, p.b}).entries;
    for (int l = 0; l <= n; ++l)
      for (int m = 0; m <= n; ++m)
        CHECK(std::abs(S(l, m) - ((l + m) % 2 ? -1.0 : 1.0) * P(l, m)) < 1e-12);
  }
}

TEST_CASE("entries match Gram-matrix quadrature") {
  const TriParams<double> p{1, 2, 3};
  const int nmax = 5;
  const auto rule = triangle_rule(nmax + 3, p);
  for (const auto& pr : kPairs) {
    const Eigen::MatrixXd Vs = tabulate_family(pr.source, nmax, p, rule, Exec::Serial);
    const Eigen::MatrixXd Vt = tabulate_family(pr.target, nmax, p, rule, Exec::Serial);
    const Eigen::MatrixXd G = weighted_gram(Vt, Vs, rule.weights, Exec::Serial);
    for (int n = 0; n <= nmax; ++n) {
      const Eigen::MatrixXd T = connection_matrix(pr.source, pr.target, n, p).entries;
      for (int l = 0; l <= n; ++l)
        for (int m = 0; m <= n; ++m) {
          const int i = n * (n + 1) / 2 + l, j = n * (n + 1) / 2 + m;
          const double g = G(i, j) / std::sqrt(tri_family_norm<double>(pr.target, {n, l}, p) *
                                                tri_family_norm<double>(pr.source, {n, m}, p));
          CHECK(std::abs(g - T(l, m)) < 1e-11);
        }
    }
  }
}

TEST_CASE("expansions reconstruct the target families") {
  const double pts[][2] = {{0.1, 0.2}, {0.33, 0.33}, {0.7, 0.05}, {0.05, 0.9}};
  for (const auto& p : kPanel)
    for (int n = 0; n <= 6; ++n)
      for (int l = 0; l <= n; ++l)
        for (const auto& pt : pts) {
          const double x = pt[0], y = pt[1];
          const double pi = tri_family_eval<double>(D3Element::pi, {n, l}, p, x, y);
          const double sg = tri_family_eval<double>(D3Element::sigma, {n, l}, p, x, y);
          CHECK(std::abs(expand_pi_in_e(n, l, p, x, y) - pi) <= 1e-10 * std::max(1.0, std::abs(pi)));
          CHECK(std::abs(expand_sigma_in_e(n, l, p, x, y) - sg) <= 1e-10 * std::max(1.0, std::abs(sg)));
          CHECK(std::abs(expand_sigma_in_pi(n, l, p, x, y) - sg) <= 1e-10 * std::max(1.0, std::abs(sg)));
        }
}

TEST_CASE("printed phases do not reconstruct") {
  const TriParams<double> p{0.5, 0.3, 1.7};
  const double x = 0.2, y = 0.3;
  // Degree 1 is the first place the phase conventions differ.
  double worst_pi = 0.0, worst_se = 0.0, worst_sp = 0.0;
  for (int l = 0; l <= 1; ++l) {
    worst_pi = std::max(worst_pi, std::abs(expand_pi_in_e(1, l, p, x, y, PhaseConvention::Printed) -
                                           tri_family_eval<double>(D3Element::pi, {1, l}, p, x, y)));
    worst_se = std::max(worst_se, std::abs(expand_sigma_in_e(1, l, p, x, y, PhaseConvention::Printed) -
                                           tri_family_eval<double>(D3Element::sigma, {1, l}, p, x, y)));
    worst_sp = std::max(worst_sp, std::abs(expand_sigma_in_pi(1, l, p, x, y, PhaseConvention::Printed) -
                                           tri_family_eval<double>(D3Element::sigma, {1, l}, p, x, y)));
  }
  CHECK(worst_pi > 1e-3);
  CHECK(worst_se > 1e-3);
  CHECK(worst_sp > 1e-3);
}

TEST_CASE("exact coefficients: magnitudes and phases") {
  const TriParams<Rational> q{make_rational(1, 3), make_rational(2, 7), make_rational(5, 4)};
  for (const auto& pr : kPairs)
    for (int n = 0; n <= 4; ++n) {
      const ExactExpansion ee = exact_expansion(pr.source, pr.target, n, q);
      REQUIRE(ee.complete);
      const auto rp = connection_racah_params(pr.source, pr.target, n, q);
      for (int l = 0; l <= n; ++l)
        for (int m = 0; m <= n; ++m) {
          const Rational& C = ee.coeffs(l, m);
          CHECK(C * C == expected_coefficient_squared(pr.source, pr.target, n, l, m, q));
          const int sign = connection_phase(pr.source, pr.target, n, l, m) *
                           sgn(Rational(racah_weight(l, rp) / racah_norm(m, rp))) * sgn(racah_eval(m, l, rp));
          CHECK(sgn(C) == sign);
        }
    }
}

TEST_CASE("unsupported pair") {
  CHECK_THROWS(connection_matrix(D3Element::sigma, D3Element::e, 2, {1, 2, 3}));
}
