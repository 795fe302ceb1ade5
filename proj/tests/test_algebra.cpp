#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trijac/algebra.hpp"
#include "trijac/errors.hpp"

using namespace trijac;

namespace {

TriParams<Rational> P1() { return {make_rational(1, 3), make_rational(2, 7), make_rational(5, 4)}; }
TriParams<Rational> P2() { return {make_rational(-1, 2), make_rational(9, 5), make_rational(3, 11)}; }

void require_all_pass(const std::vector<RelationReport>& reps) {
  for (const auto& r : reps) {
    INFO(r.id << ": " << r.detail);
    CHECK(r.passed);
  }
}

}  // namespace

TEST_CASE("differential relations vanish exactly") {
  for (const auto& p : {P1(), P2()}) {
    const auto reps = verify_appendix_a(p);
    CHECK(reps.size() >= 25);
    require_all_pass(reps);
  }
}

TEST_CASE("lattice relations vanish on the untruncated rows") {
  require_all_pass(verify_appendix_a_lattice(4, P1()));
}

TEST_CASE("serial and parallel relation runs agree") {
  const auto s = verify_appendix_a(P2(), false);
  const auto p = verify_appendix_a(P2(), true);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].id == p[i].id);
    CHECK(s[i].passed == p[i].passed);
  }
}

TEST_CASE("commutator engine satisfies the Jacobi identity") {
  require_all_pass(verify_jacobi_identity(P1()));
}

TEST_CASE("rank-one subalgebras") {
  require_all_pass(verify_rank1_subalgebras(P1(), 4));
  require_all_pass(verify_rank1_subalgebras(P2(), 3));
}

TEST_CASE("printed variants fail") {
  for (const auto& r : verify_printed_variants(P1(), 3)) {
    INFO(r.id);
    CHECK_FALSE(r.passed);
  }
}

TEST_CASE("intertwining on unnormalized polynomials") {
  require_all_pass(verify_intertwining(4, P1()));
}

TEST_CASE("hermiticity") {
  const TriParams<double> p{0.5, 0.3, 1.7};
  require_all_pass(verify_hermiticity(4, p, triangle_rule(10, p)));
}

TEST_CASE("diff realization basics") {
  const auto r = build_diff_realization(P1());
  CHECK((r.L - r.L).is_zero());
  const auto ab = (r.L1 + r.L3) * r.X1 - r.L1 * r.X1 - r.L3 * r.X1;
  CHECK(ab.is_zero());
}

TEST_CASE("degenerate lattice denominators throw") {
  // s = -1 zeroes 2n+s+1 at n = 0.
  const TriParams<Rational> bad{make_rational(-1, 2), make_rational(-1, 4), make_rational(-1, 4)};
  CHECK_THROWS_AS(build_lattice_realization(2, bad), DegenerateDenominator);
}
