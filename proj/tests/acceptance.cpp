// Acceptance report: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line each. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "trijac/suites.hpp"

using namespace trijac;

namespace {

struct Criterion {
  int number;
  const char* title;
  double budget_s;
  std::function<std::vector<Check>()> run;
};

std::vector<Check> concat(std::vector<Check> a, const std::vector<Check>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

int main() {
  SuiteConfig exact;
  exact.seed = 7;

  SuiteConfig n6 = exact;
  n6.nmax = 6;

  const std::vector<Criterion> criteria = {
      {1, "exact algebra certification (5 random rational triples)", 10.0,
       [&] { return concat(suite_algebra(exact), suite_subalgebras(exact)); }},
      {2, "univariate bispectrality, n <= 8", 2.0, [&] {
         SuiteConfig c = exact;
         c.nmax = 8;
         return suite_univariate(c);
       }},
      {3, "bivariate orthogonality of the e, pi, sigma families, n <= 6, rel 1e-10", 5.0,
       [&] { return suite_orthogonality(n6); }},
      {4, "Racah orthogonality, recurrence, difference and algebra, N <= 6", 5.0, [&] {
         SuiteConfig c = exact;
         c.N = 6;
         return suite_racah(c);
       }},
      {5, "connection reconstruction (n <= 6, 1e-10) and orthogonality (n <= 10, 1e-12)", 5.0,
       [&] {
         SuiteConfig c = n6;
         c.N = 10;
         return suite_connection(c);
       }},
      {6, "intertwining of all five generators, n <= 6", 10.0,
       [&] { return suite_intertwine(n6); }},
      {7, "D3 multiplication table and family phases, n <= 6", 2.0,
       [&] { return suite_d3(n6); }},
      {8, "hermiticity in the orthonormal basis, N = 5, 1e-10", 5.0, [&] {
         SuiteConfig c = exact;
         c.N = 5;
         return suite_hermiticity(c);
       }},
  };

  bool all_ok = true;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string error;
    try {
      checks = cr.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t failed = 0;
    for (const auto& c : checks)
      if (!c.passed) ++failed;
    const bool in_time = secs <= cr.budget_s;
    const bool ok = error.empty() && !checks.empty() && failed == 0 && in_time;
    all_ok = all_ok && ok;
    std::printf("[%s] %d. %s: %zu/%zu checks, max residual %.3g, %.2f s (budget %.0f s)%s%s\n",
                ok ? "PASS" : "FAIL", cr.number, cr.title, checks.size() - failed, checks.size(),
                max_residual(checks), secs, cr.budget_s, in_time ? "" : " OVER BUDGET",
                error.empty() ? "" : (" error: " + error).c_str());
    for (const auto& c : checks)
      if (!c.passed) std::printf("    failed %s: %s\n", c.id.c_str(), c.detail.c_str());
  }
  return all_ok ? 0 : 1;
}
