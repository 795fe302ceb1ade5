#include "trijac/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "trijac/algebra.hpp"
#include "trijac/connection.hpp"
#include "trijac/errors.hpp"
#include "trijac/jacobi1d.hpp"
#include "trijac/quadrature.hpp"
#include "trijac/racah.hpp"
#include "trijac/triangle.hpp"

namespace trijac {

namespace {

int pick(int dflt, int v) { return v >= 0 ? v : dflt; }
double pick(double dflt, double v) { return v > 0 ? v : dflt; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

std::vector<TriParams<Rational>> exact_params(const SuiteConfig& cfg, int count) {
  if (cfg.exact) return {*cfg.exact};
  if (cfg.floating) return {to_rational(*cfg.floating)};
  return random_rational_triples(cfg.seed, count);
}

std::vector<TriParams<double>> float_params(const SuiteConfig& cfg) {
  if (cfg.floating) return {*cfg.floating};
  if (cfg.exact) return {to_double(*cfg.exact)};
  return default_float_panel();
}

std::string tag(std::size_t i) { return "p" + std::to_string(i + 1); }

Check from_report(const std::string& prefix, const RelationReport& r, const std::string& ref,
                  const std::string& params) {
  return {prefix + r.id, ref, r.passed, r.residual, r.detail + "; " + params};
}

Check bool_check(std::string id, std::string ref, std::size_t failures, std::string detail) {
  return {std::move(id), std::move(ref), failures == 0, static_cast<double>(failures),
          failures == 0 ? std::move(detail) : std::to_string(failures) + " failures; " + detail};
}

Check tol_check(std::string id, std::string ref, double residual, double tol, std::string detail) {
  const bool ok = std::isfinite(residual) && residual <= tol;
  return {std::move(id), std::move(ref), ok, residual,
          "max residual " + fmt(residual) + " (tol " + fmt(tol) + "); " + detail};
}

bool bad_pair(const Rational& v) { return v == 0 || v == -1; }

}  // namespace

std::string params_string(const TriParams<Rational>& p) {
  return "a=" + to_string(p.a) + " b=" + to_string(p.b) + " c=" + to_string(p.c);
}

std::string params_string(const TriParams<double>& p) {
  return "a=" + to_string(p.a) + " b=" + to_string(p.b) + " c=" + to_string(p.c);
}

std::vector<TriParams<Rational>> random_rational_triples(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    const long den = 1 + static_cast<long>(rng() % 13);
    // numerator in (-den, 5 den)
    const long num = -den + 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(6 * den - 1));
    return make_rational(num, den);
  };
  std::vector<TriParams<Rational>> out;
  while (static_cast<int>(out.size()) < count) {
    TriParams<Rational> p{draw(), draw(), draw()};
    const Rational s = p.sum();
    if (bad_pair(p.a + p.b) || bad_pair(p.b + p.c) || bad_pair(p.a + p.c)) continue;
    if (s == -1 || s == -2) continue;
    out.push_back(p);
  }
  return out;
}

std::vector<TriParams<double>> default_float_panel() {
  return {{0.0, 0.0, 0.0}, {1.0, 2.0, 3.0}, {0.5, 0.3, 1.7}};
}

std::vector<Check> suite_algebra(const SuiteConfig& cfg) {
  const auto params = exact_params(cfg, 5);
  const int N = pick(4, cfg.N);
  const bool par = cfg.exec == Exec::Parallel;
  std::vector<Check> out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::string ps = params_string(params[i]);
    for (const auto& r : verify_appendix_a(params[i], par))
      out.push_back(from_report("algebra/" + tag(i) + "/diff/", r,
                                "defining relation of the rank-two Jacobi algebra", ps));
    for (const auto& r : verify_jacobi_identity(params[i]))
      out.push_back(from_report("algebra/" + tag(i) + "/", r, "commutator engine consistency", ps));
  }
  for (const auto& r : verify_appendix_a_lattice(N, params.front(), par))
    out.push_back(from_report("algebra/" + tag(0) + "/lattice/", r,
                              "defining relation in the difference realization",
                              params_string(params.front())));
  return out;
}

std::vector<Check> suite_subalgebras(const SuiteConfig& cfg) {
  const auto params = exact_params(cfg, 5);
  const int nmax = pick(4, cfg.nmax);
  const bool par = cfg.exec == Exec::Parallel;
  std::vector<Check> out;
  for (std::size_t i = 0; i < params.size(); ++i)
    for (const auto& r : verify_rank1_subalgebras(params[i], nmax, par))
      out.push_back(from_report("subalgebras/" + tag(i) + "/", r,
                                "centralizer presentation as a rank-one Jacobi or Racah algebra",
                                params_string(params[i])));
  return out;
}

std::vector<Check> suite_intertwine(const SuiteConfig& cfg) {
  const auto params = exact_params(cfg, 1);
  const int nmax = pick(6, cfg.nmax);
  std::vector<Check> out;
  for (std::size_t i = 0; i < params.size(); ++i)
    for (const auto& r : verify_intertwining(nmax, params[i], cfg.exec == Exec::Parallel))
      out.push_back(from_report("intertwine/" + tag(i) + "/", r,
                                "differential action equals the lattice recurrence",
                                params_string(params[i])));
  return out;
}

std::vector<Check> suite_hermiticity(const SuiteConfig& cfg) {
  const int N = pick(5, cfg.N);
  const double tol = pick(1e-10, cfg.tol);
  std::vector<Check> out;
  const auto panel = float_params(cfg);
  for (std::size_t i = 0; i < panel.size(); ++i) {
    const QuadratureRule rule = triangle_rule(N + 4, panel[i]);
    for (const auto& r : verify_hermiticity(N, panel[i], rule, tol))
      out.push_back(from_report("hermiticity/" + tag(i) + "/", r,
                                "generators symmetric in the orthonormal basis",
                                params_string(panel[i])));
  }
  return out;
}

std::vector<Check> suite_orthogonality(const SuiteConfig& cfg) {
  const int nmax = pick(6, cfg.nmax);
  const double tol = pick(1e-10, cfg.tol);
  std::vector<Check> out;
  const auto panel = float_params(cfg);
  for (std::size_t i = 0; i < panel.size(); ++i) {
    const QuadratureRule rule = triangle_rule(nmax + 4, panel[i]);
    for (D3Element g : kD3Elements) {
      const Eigen::MatrixXd G = normalized_family_gram(g, nmax, panel[i], rule, cfg.exec);
      const double res =
          (G - Eigen::MatrixXd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();
      out.push_back(tol_check("orthogonality/" + tag(i) + "/" + std::string(d3_name(g)),
                              "orthogonality with the product norms", res, tol,
                              "n <= " + std::to_string(nmax) + ", " +
                                  std::to_string(rule.size()) + " nodes; " +
                                  params_string(panel[i])));
    }
  }
  return out;
}

std::vector<Check> suite_connection(const SuiteConfig& cfg) {
  const int nmax = pick(6, cfg.nmax);
  const int N = pick(10, cfg.N);
  const double tol = pick(1e-10, cfg.tol);
  const double orth_tol = 1e-12;
  std::vector<Check> out;
  const auto panel = float_params(cfg);

  struct Expansion {
    const char* name;
    D3Element source, target;
    double (*fn)(int, int, const TriParams<double>&, double, double, PhaseConvention);
  };
  const Expansion expansions[] = {
      {"pi<-e", D3Element::e, D3Element::pi, &expand_pi_in_e},
      {"sigma<-e", D3Element::e, D3Element::sigma, &expand_sigma_in_e},
      {"sigma<-pi", D3Element::pi, D3Element::sigma, &expand_sigma_in_pi},
  };

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::pair<double, double>> pts;
  while (pts.size() < 10) {
    const double x = unif(rng), y = unif(rng);
    if (x + y < 0.95 && x > 0.02 && y > 0.02) pts.emplace_back(x, y);
  }

  for (std::size_t i = 0; i < panel.size(); ++i) {
    const auto& p = panel[i];
    const std::string ps = params_string(p);
    for (const auto& ex : expansions) {
      double worst = 0.0;
      for (int n = 0; n <= nmax; ++n)
        for (int l = 0; l <= n; ++l)
          for (const auto& [x, y] : pts) {
            const double want = tri_family_eval<double>(ex.target, {n, l}, p, x, y);
            const double got = ex.fn(n, l, p, x, y, PhaseConvention::Verified);
            worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
          }
      out.push_back(tol_check("connection/" + tag(i) + "/reconstruct/" + ex.name,
                              "expansion of one family in another via Racah functions", worst, tol,
                              "n <= " + std::to_string(nmax) +
                                  ", 10 interior points, error relative to max(1,|target|); " + ps));

      double orth = 0.0;
      for (int n = 0; n <= N; ++n) {
        const auto T = connection_matrix(ex.source, ex.target, n, p).entries;
        orth = std::max(orth, (T.transpose() * T - Eigen::MatrixXd::Identity(n + 1, n + 1))
                                  .cwiseAbs()
                                  .maxCoeff());
      }
      out.push_back(tol_check("connection/" + tag(i) + "/orthogonal/" + ex.name,
                              "connection matrix is orthogonal", orth, orth_tol,
                              "n <= " + std::to_string(N) + "; " + ps));
    }
    double coh = 0.0;
    for (int n = 0; n <= N; ++n) {
      const Eigen::MatrixXd A = connection_sigma(n, p).entries;
      const Eigen::MatrixXd B = connection_sigma_from_pi(n, p).entries * connection_pi(n, p).entries;
      coh = std::max(coh, (A - B).cwiseAbs().maxCoeff());
    }
    out.push_back(tol_check("connection/" + tag(i) + "/coherence",
                            "sigma<-e equals (sigma<-pi)(pi<-e)", coh, orth_tol,
                            "n <= " + std::to_string(N) + "; " + ps));
  }

  // Exact certificate: coefficients solved in rational arithmetic.
  const auto ex_params = exact_params(cfg, 1);
  const TriParams<Rational>& q = ex_params.front();
  const int nexact = std::min(nmax, 4);
  for (const auto& ex : expansions) {
    std::size_t fails = 0;
    for (int n = 0; n <= nexact; ++n) {
      const ExactExpansion ee = exact_expansion(ex.source, ex.target, n, q);
      if (!ee.complete) {
        ++fails;
        continue;
      }
      const RacahParams<Rational> rp = connection_racah_params(ex.source, ex.target, n, q);
      for (int l = 0; l <= n; ++l)
        for (int m = 0; m <= n; ++m) {
          const Rational& C = ee.coeffs(l, m);
          if (C * C != expected_coefficient_squared(ex.source, ex.target, n, l, m, q)) {
            ++fails;
            continue;
          }
          const Rational ratio = racah_weight(l, rp) / racah_norm(m, rp);
          const int want = connection_phase(ex.source, ex.target, n, l, m) * sgn(ratio) *
                           sgn(racah_eval(m, l, rp));
          if (sgn(C) != want) ++fails;
        }
    }
    out.push_back(bool_check(std::string("connection/exact/") + ex.name,
                             "exact expansion coefficients, magnitudes and phases", fails,
                             "n <= " + std::to_string(nexact) + "; " + params_string(q)));
  }
  return out;
}

std::vector<Check> suite_racah(const SuiteConfig& cfg) {
  const int Nmax = pick(6, cfg.N);
  std::vector<Check> out;
  const Rational a0 = make_rational(2, 7), b0 = make_rational(3, 5), g0 = make_rational(1, 3),
                 d0 = make_rational(5, 11);
  const std::pair<const char*, TruncationCase> cases[] = {
      {"alpha", TruncationCase::AlphaCase},
      {"beta+delta", TruncationCase::BetaDeltaCase},
      {"gamma", TruncationCase::GammaCase},
  };
  for (const auto& [name, tc] : cases) {
    std::size_t orth = 0, rec = 0, diff = 0, alg = 0;
    for (int N = 0; N <= Nmax; ++N) {
      Rational al = a0, be = b0, ga = g0, de = d0;
      if (tc == TruncationCase::AlphaCase) al = -N - 1;
      if (tc == TruncationCase::BetaDeltaCase) be = -N - 1 - de;
      if (tc == TruncationCase::GammaCase) ga = -N - 1;
      const auto rp = RacahParams<Rational>::make(al, be, ga, de, N);
      std::vector<std::vector<Rational>> R(N + 1, std::vector<Rational>(N + 1));
      for (int m = 0; m <= N; ++m)
        for (int l = 0; l <= N; ++l) R[m][l] = racah_eval(m, l, rp);
      std::vector<Rational> w(N + 1);
      for (int l = 0; l <= N; ++l) w[l] = racah_weight(l, rp);
      for (int m = 0; m <= N; ++m)
        for (int m2 = 0; m2 <= N; ++m2) {
          Rational sum = 0;
          for (int l = 0; l <= N; ++l) sum += w[l] * R[m][l] * R[m2][l];
          if (sum != (m == m2 ? racah_norm(m, rp) : Rational(0))) ++orth;
        }
      for (int m = 0; m <= N; ++m)
        for (int l = 0; l <= N; ++l) {
          const auto rc = racah_recurrence(m, rp);
          Rational rhs = -(rc.A + rc.C) * R[m][l];
          if (m < N) rhs += rc.A * R[m + 1][l];
          else if (rc.A != 0) ++rec;
          if (m > 0) rhs += rc.C * R[m - 1][l];
          if (racah_lambda(l, rp) * R[m][l] != rhs) ++rec;

          const auto df = racah_difference(l, rp);
          Rational lhs = -(df.B + df.D) * R[m][l];
          if (l < N) lhs += df.B * R[m][l + 1];
          else if (df.B != 0) ++diff;
          if (l > 0) lhs += df.D * R[m][l - 1];
          if (lhs != Rational(m) * (m + rp.alpha + rp.beta + 1) * R[m][l]) ++diff;
        }
      const auto [K1, K2] = racah_realization(rp);
      const auto [r1, r2] = racah_relation_residuals(K1, K2, racah_structure(rp),
                                                      RMatrix::identity(N + 1));
      alg += r1.nonzero_count() + r2.nonzero_count();
    }
    const std::string scope = std::string(name) + " truncation, N <= " + std::to_string(Nmax);
    out.push_back(bool_check(std::string("racah/") + name + "/orthogonality",
                             "weighted orthogonality with the closed-form norm", orth, scope));
    out.push_back(bool_check(std::string("racah/") + name + "/recurrence",
                             "three-term recurrence in the degree", rec, scope));
    out.push_back(bool_check(std::string("racah/") + name + "/difference",
                             "difference equation in the lattice variable", diff, scope));
    out.push_back(bool_check(std::string("racah/") + name + "/algebra",
                             "Racah algebra relations of the difference realization", alg, scope));
  }
  return out;
}

std::vector<Check> suite_univariate(const SuiteConfig& cfg) {
  const int nmax = pick(8, cfg.nmax);
  std::vector<Jacobi1DParams<Rational>> pairs;
  if (cfg.exact) {
    pairs.push_back({cfg.exact->a, cfg.exact->b});
  } else {
    for (const auto& t : random_rational_triples(cfg.seed, 5)) pairs.push_back({t.a, t.b});
  }
  std::vector<Check> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const PolyDiffOp H = jacobi1d_diffop(p);
    const BivarPoly x = BivarPoly::x();
    const BivarPoly one_m_2x = BivarPoly(Rational(1)) - x * Rational(2);
    std::size_t eig = 0, rec = 0;
    std::vector<BivarPoly> J;
    for (int n = 0; n <= nmax + 1; ++n) J.push_back(jacobi1d_poly(n, p));
    for (int n = 0; n <= nmax; ++n) {
      eig += (H.apply(J[n]) + J[n] * Rational(n * (n + p.a + p.b + 1))).size();
      if (n == 0) continue;
      const auto rc = jacobi1d_recurrence(n, p);
      rec += (one_m_2x * J[n] - (J[n + 1] * rc.cPlus + J[n] * rc.cZero + J[n - 1] * rc.cMinus)).size();
    }
    const std::string ps = "a=" + to_string(p.a) + " b=" + to_string(p.b);
    out.push_back(bool_check("univariate/" + tag(i) + "/eigen",
                             "hypergeometric differential equation", eig,
                             "n <= " + std::to_string(nmax) + "; " + ps));
    out.push_back(bool_check("univariate/" + tag(i) + "/recurrence", "three-term recurrence", rec,
                             "1 <= n <= " + std::to_string(nmax) + "; " + ps));
  }
  return out;
}

std::vector<Check> suite_d3(const SuiteConfig& cfg) {
  const int nmax = pick(6, cfg.nmax);
  std::vector<Check> out;

  // Composition of slot permutations against the multiplication table.
  std::size_t table = 0;
  for (D3Element g : kD3Elements)
    for (D3Element h : kD3Elements) {
      const auto sg = d3_slots(g), sh = d3_slots(h), sgh = d3_slots(d3_compose(g, h));
      for (int i = 0; i < 3; ++i)
        if (sg[sh[i]] != sgh[i]) ++table;
      if (d3_compose(g, d3_inverse(g)) != D3Element::e) ++table;
    }
  out.push_back(bool_check("d3/cayley", "multiplication table of the dihedral group", table,
                           "6 x 6 products against composed slot permutations"));

  const auto params = exact_params(cfg, 1);
  const TriParams<Rational>& p = params.front();
  for (D3Element g : kD3Elements) {
    std::size_t bad = 0;
    const FamilyReduction red = d3_reduce(g);
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; k <= n; ++k) {
        BivarPoly base = tri_action_poly(red.base, {n, k}, p);
        if (red.phase_k && k % 2 != 0) base *= Rational(-1);
        if (!(tri_action_poly(g, {n, k}, p) == base)) ++bad;
      }
    std::string ref = red.phase_k ? "family equals (-1)^k times its reflection partner"
                                  : "family defined by substitution";
    out.push_back(bool_check("d3/family/" + std::string(d3_name(g)), ref, bad,
                             "n <= " + std::to_string(nmax) + "; " + params_string(p)));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra",       "subalgebras", "intertwine",
                                                 "hermiticity",   "orthogonality", "connection",
                                                 "racah",         "univariate",  "d3"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, const SuiteConfig& cfg) {
  using Fn = std::vector<Check> (*)(const SuiteConfig&);
  static const std::map<std::string, Fn> table = {
      {"algebra", &suite_algebra},         {"subalgebras", &suite_subalgebras},
      {"intertwine", &suite_intertwine},   {"hermiticity", &suite_hermiticity},
      {"orthogonality", &suite_orthogonality}, {"connection", &suite_connection},
      {"racah", &suite_racah},             {"univariate", &suite_univariate},
      {"d3", &suite_d3},
  };
  std::vector<Check> out;
  if (name == "all") {
    for (const auto& n : suite_names()) {
      auto part = table.at(n)(cfg);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else {
    auto it = table.find(name);
    if (it == table.end()) throw InvalidParameters("unknown suite '" + name + "'");
    out = it->second(cfg);
  }
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

double max_residual(const std::vector<Check>& checks) {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

}  // namespace trijac
