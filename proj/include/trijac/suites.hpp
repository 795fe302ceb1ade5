#pragma once
// Verification suites shared by the CLI and the acceptance report. Each suite
// returns a flat list of checks sorted by id.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trijac/kernels.hpp"
#include "trijac/params.hpp"

namespace trijac {

struct Check {
  std::string id;
  std::string paper_ref;  // the identity being certified, in words
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

struct SuiteConfig {
  int nmax = -1;      // -1: suite default
  int N = -1;         // -1: suite default
  double tol = -1.0;  // -1: suite default
  std::uint64_t seed = 7;
  // Parameters for exact suites. Unset: random triples drawn from seed.
  std::optional<TriParams<Rational>> exact;
  // Parameters for floating-point suites. Unset: a fixed panel of triples.
  std::optional<TriParams<double>> floating;
  Exec exec = Exec::Parallel;
};

// Random rational triples in (-1, 5)^3 with denominators <= 13, avoiding
// parameter values that zero a lattice or recurrence denominator.
std::vector<TriParams<Rational>> random_rational_triples(std::uint64_t seed, int count);

// Default float panel: (0,0,0), (1,2,3), (0.5,0.3,1.7).
std::vector<TriParams<double>> default_float_panel();

std::vector<Check> suite_algebra(const SuiteConfig& cfg);
std::vector<Check> suite_subalgebras(const SuiteConfig& cfg);
std::vector<Check> suite_intertwine(const SuiteConfig& cfg);
std::vector<Check> suite_hermiticity(const SuiteConfig& cfg);
std::vector<Check> suite_orthogonality(const SuiteConfig& cfg);
std::vector<Check> suite_connection(const SuiteConfig& cfg);
std::vector<Check> suite_racah(const SuiteConfig& cfg);
std::vector<Check> suite_univariate(const SuiteConfig& cfg);
std::vector<Check> suite_d3(const SuiteConfig& cfg);

const std::vector<std::string>& suite_names();
// Runs a suite by name ("all" runs every suite); throws InvalidParameters on
// an unknown name.
std::vector<Check> run_suite(const std::string& name, const SuiteConfig& cfg);

bool all_passed(const std::vector<Check>& checks);
double max_residual(const std::vector<Check>& checks);

std::string params_string(const TriParams<Rational>& p);
std::string params_string(const TriParams<double>& p);

}  // namespace trijac
