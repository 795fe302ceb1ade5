#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "trijac/kernels.hpp"

using namespace trijac;

namespace {

bool bitwise_equal(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (Eigen::Index i = 0; i < A.size(); ++i)
    if (A.data()[i] != B.data()[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), Exec::Parallel, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("parallel_for rethrows") {
  for (Exec e : {Exec::Serial, Exec::Parallel})
    CHECK_THROWS_AS(parallel_for(100, e,
                                 [](std::size_t i) {
                                   if (i == 37) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
}

TEST_CASE("serial and parallel tabulation agree bitwise") {
  const TriParams<double> p{0.5, 0.3, 1.7};
  const auto rule = triangle_rule(12, p);
  for (D3Element g : {D3Element::e, D3Element::pi, D3Element::sigma, D3Element::tau}) {
    const Eigen::MatrixXd S = tabulate_family(g, 8, p, rule, Exec::Serial);
    const Eigen::MatrixXd P = tabulate_family(g, 8, p, rule, Exec::Parallel);
    CHECK(S.cols() == 45);
    CHECK(bitwise_equal(S, P));
  }
}

TEST_CASE("tabulated exact polynomials match float evaluation") {
  const TriParams<Rational> q{make_rational(1, 2), make_rational(3, 10), make_rational(17, 10)};
  const TriParams<double> p{0.5, 0.3, 1.7};
  const auto rule = triangle_rule(6, p);
  std::vector<BivarPoly> polys;
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) polys.push_back(tri_poly({n, k}, q));
  const Eigen::MatrixXd A = tabulate_polys(polys, rule, Exec::Parallel);
  const Eigen::MatrixXd B = tabulate_family(D3Element::e, 4, p, rule, Exec::Serial);
  CHECK(bitwise_equal(A, tabulate_polys(polys, rule, Exec::Serial)));
  CHECK((A - B).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, B.cwiseAbs().maxCoeff()));
}

TEST_CASE("Gram kernels agree bitwise and are orthonormal") {
  const TriParams<double> p{1, 2, 3};
  const auto rule = triangle_rule(10, p);
  const Eigen::MatrixXd V = tabulate_family(D3Element::e, 8, p, rule, Exec::Serial);
  CHECK(bitwise_equal(weighted_gram(V, V, rule.weights, Exec::Serial),
                      weighted_gram(V, V, rule.weights, Exec::Parallel)));
  for (D3Element g : {D3Element::e, D3Element::pi, D3Element::sigma}) {
    const Eigen::MatrixXd S = normalized_family_gram(g, 8, p, rule, Exec::Serial);
    const Eigen::MatrixXd P = normalized_family_gram(g, 8, p, rule, Exec::Parallel);
    CHECK(bitwise_equal(S, P));
    CHECK((S - Eigen::MatrixXd::Identity(S.rows(), S.cols())).cwiseAbs().maxCoeff() < 1e-11);
  }
}
