// trijac: evaluation, tabulation and verification driver.
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage or parameter error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trijac/connection.hpp"
#include "trijac/errors.hpp"
#include "trijac/quadrature.hpp"
#include "trijac/suites.hpp"
#include "trijac/triangle.hpp"

using namespace trijac;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string a, b, c;  // empty: not given
  int n = 0, k = 0;
  int nmax = -1, N = -1;
  std::string family = "e";
  std::string from = "e";
  std::vector<std::string> at;
  int grid = 0;
  std::uint64_t seed = 7;
  std::string format;
  std::string out;
  double tol = -1.0;
  std::string suite;
};

bool params_given(const Options& o) { return !o.a.empty() || !o.b.empty() || !o.c.empty(); }

std::string or_zero(const std::string& s) { return s.empty() ? "0" : s; }

bool params_exact_literals(const Options& o) {
  return is_rational_literal(or_zero(o.a)) && is_rational_literal(or_zero(o.b)) &&
         is_rational_literal(or_zero(o.c));
}

Rational parse_param(const std::string& s, const char* name) {
  try {
    return parse_rational(or_zero(s));
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid value for --") + name + ": '" + s + "'");
  }
}

TriParams<Rational> exact_params(const Options& o) {
  return {parse_param(o.a, "a"), parse_param(o.b, "b"), parse_param(o.c, "c")};
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    // p/q literal
    try {
      return parse_rational(s).get_d();
    } catch (const std::exception&) {
      throw UsageError(std::string("invalid value for ") + what + ": '" + s + "'");
    }
  }
}

TriParams<double> float_params(const Options& o) {
  return {parse_double(or_zero(o.a), "--a"), parse_double(or_zero(o.b), "--b"),
          parse_double(or_zero(o.c), "--c")};
}

D3Element parse_family(const std::string& name) {
  auto g = d3_parse(name);
  if (!g) throw UsageError("unknown family '" + name + "' (expected e, pi, sigma, tau, rot1, rot2)");
  return *g;
}

struct Point {
  std::string xs, ys;
};

std::vector<Point> points(const Options& o) {
  std::vector<Point> pts;
  for (const auto& s : o.at) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--at expects x,y but got '" + s + "'");
    pts.push_back({s.substr(0, comma), s.substr(comma + 1)});
  }
  if (o.grid > 0) {
    for (int i = 0; i <= o.grid; ++i)
      for (int j = 0; i + j <= o.grid; ++j)
        pts.push_back({to_string(make_rational(i, o.grid)), to_string(make_rational(j, o.grid))});
  }
  if (pts.empty()) throw UsageError("give evaluation points with --at x,y or --grid m");
  return pts;
}

// Output sink: stdout or --out.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string format_or(const Options& o, const char* dflt) {
  const std::string f = o.format.empty() ? dflt : o.format;
  if (f != "table" && f != "csv" && f != "json") throw UsageError("unknown format '" + f + "'");
  return f;
}

struct Row {
  std::string family;
  int n, k;
  std::string x, y, value;
};

void emit_rows(const std::vector<Row>& rows, const std::string& fmt, std::ostream& os) {
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"family", r.family}, {"n", r.n}, {"k", r.k}, {"x", r.x}, {"y", r.y},
                     {"value", r.value}});
    os << arr.dump(2) << "\n";
  } else if (fmt == "csv") {
    os << "family,n,k,x,y,value\n";
    for (const auto& r : rows)
      os << r.family << "," << r.n << "," << r.k << "," << r.x << "," << r.y << "," << r.value << "\n";
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-6s %3s %3s %-22s %-22s %s\n", "family", "n", "k", "x", "y", "value");
    os << buf;
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%-6s %3d %3d %-22s %-22s %s\n", r.family.c_str(), r.n, r.k,
                    r.x.c_str(), r.y.c_str(), r.value.c_str());
      os << buf;
    }
  }
}

// Exact when parameters and the point are all p/q or integer literals.
std::string family_value(D3Element g, TriIndex idx, const Options& o, const Point& pt) {
  if (params_exact_literals(o) && is_rational_literal(pt.xs) && is_rational_literal(pt.ys)) {
    const Rational x = parse_rational(pt.xs), y = parse_rational(pt.ys);
    return to_string(tri_family_eval<Rational>(g, idx, exact_params(o), x, y));
  }
  const double x = parse_double(pt.xs, "--at"), y = parse_double(pt.ys, "--at");
  return to_string(tri_family_eval<double>(g, idx, float_params(o), x, y));
}

void check_index(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw UsageError("need 0 <= k <= n");
}

int cmd_eval(const Options& o) {
  const D3Element g = parse_family(o.family);
  check_index(o.n, o.k);
  std::vector<Row> rows;
  for (const auto& pt : points(o))
    rows.push_back({o.family, o.n, o.k, pt.xs, pt.ys, family_value(g, {o.n, o.k}, o, pt)});
  Sink sink(o.out);
  emit_rows(rows, format_or(o, "table"), sink.os());
  return 0;
}

int cmd_table(const Options& o) {
  const D3Element g = parse_family(o.family);
  const int nmax = o.nmax >= 0 ? o.nmax : 3;
  std::vector<Row> rows;
  for (const auto& pt : points(o))
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; k <= n; ++k)
        rows.push_back({o.family, n, k, pt.xs, pt.ys, family_value(g, {n, k}, o, pt)});
  Sink sink(o.out);
  emit_rows(rows, format_or(o, "csv"), sink.os());
  return 0;
}

json config_json(const Options& o, const std::string& command) {
  json cfg;
  cfg["command"] = command;
  if (!o.suite.empty()) cfg["suite"] = o.suite;
  if (params_given(o)) cfg["parameters"] = {{"a", or_zero(o.a)}, {"b", or_zero(o.b)}, {"c", or_zero(o.c)}};
  else cfg["parameters"] = nullptr;
  cfg["nmax"] = o.nmax >= 0 ? json(o.nmax) : json(nullptr);
  cfg["N"] = o.N >= 0 ? json(o.N) : json(nullptr);
  cfg["tol"] = o.tol > 0 ? json(o.tol) : json(nullptr);
  cfg["seed"] = o.seed;
  return cfg;
}

int cmd_verify(const Options& o) {
  const std::string fmt = format_or(o, "json");
  SuiteConfig cfg;
  cfg.nmax = o.nmax;
  cfg.N = o.N;
  cfg.tol = o.tol;
  cfg.seed = o.seed;
  if (o.tol == 0.0 || (o.tol < 0 && o.tol != -1.0)) throw UsageError("--tol must be positive");
  if (params_given(o)) {
    cfg.exact = exact_params(o);
    cfg.floating = float_params(o);
  }
  const std::vector<Check> checks = run_suite(o.suite, cfg);
  const bool ok = all_passed(checks);

  Sink sink(o.out);
  std::ostream& os = sink.os();
  if (fmt == "json") {
    json rep;
    rep["version"] = "1";
    rep["config"] = config_json(o, "verify");
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back({{"id", c.id}, {"paper_ref", c.paper_ref}, {"passed", c.passed},
                     {"residual", c.residual}, {"detail", c.detail}});
    rep["checks"] = arr;
    rep["passed"] = ok;
    os << rep.dump(2) << "\n";
  } else if (fmt == "csv") {
    os << "id,passed,residual,detail\n";
    for (const auto& c : checks)
      os << c.id << "," << (c.passed ? "true" : "false") << "," << to_string(c.residual) << ",\""
         << c.detail << "\"\n";
  } else {
    for (const auto& c : checks)
      os << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.detail << "\n";
    os << checks.size() << " checks, " << (ok ? "all passed" : "FAILURES") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_connection(const Options& o) {
  const D3Element src = parse_family(o.from);
  const D3Element tgt = parse_family(o.family == "e" ? "pi" : o.family);
  if (o.n < 0) throw UsageError("need n >= 0");
  const ConnectionMatrix cm = connection_matrix(src, tgt, o.n, float_params(o));
  const std::string fmt = format_or(o, "csv");
  Sink sink(o.out);
  std::ostream& os = sink.os();
  const int d = o.n + 1;
  if (fmt == "json") {
    json rep;
    rep["source"] = std::string(d3_name(src));
    rep["target"] = std::string(d3_name(tgt));
    rep["n"] = o.n;
    json rows = json::array();
    for (int l = 0; l < d; ++l) {
      json row = json::array();
      for (int m = 0; m < d; ++m) row.push_back(cm.entries(l, m));
      rows.push_back(row);
    }
    rep["entries"] = rows;
    os << rep.dump(2) << "\n";
  } else {
    const char sep = fmt == "csv" ? ',' : ' ';
    os << "l\\m";
    for (int m = 0; m < d; ++m) os << sep << m;
    os << "\n";
    for (int l = 0; l < d; ++l) {
      os << l;
      for (int m = 0; m < d; ++m) os << sep << to_string(cm.entries(l, m));
      os << "\n";
    }
  }
  return 0;
}

int cmd_quadrature(const Options& o, bool interval) {
  const int npts = o.n > 0 ? o.n : 8;
  const TriParams<double> p = float_params(o);
  const QuadratureRule rule = interval ? gauss_jacobi_01(npts, p.a, p.b) : triangle_rule(npts, p);
  const std::string fmt = format_or(o, "csv");
  Sink sink(o.out);
  std::ostream& os = sink.os();
  if (fmt == "json") {
    json rep;
    rep["exactDegree"] = rule.exactDegree;
    json nodes = json::array();
    for (std::size_t i = 0; i < rule.size(); ++i) {
      json nd = {{"x", rule.nodes[i].x}};
      if (!interval) nd["y"] = rule.nodes[i].y;
      nd["w"] = rule.weights[i];
      nodes.push_back(nd);
    }
    rep["nodes"] = nodes;
    os << rep.dump(2) << "\n";
  } else {
    const char sep = fmt == "csv" ? ',' : ' ';
    os << (interval ? std::string("x") + sep + "w\n" : std::string("x") + sep + "y" + sep + "w\n");
    for (std::size_t i = 0; i < rule.size(); ++i) {
      os << to_string(rule.nodes[i].x) << sep;
      if (!interval) os << to_string(rule.nodes[i].y) << sep;
      os << to_string(rule.weights[i]) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-variable Jacobi polynomials on the triangle: evaluation and certification"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&o](CLI::App* sc) {
    sc->add_option("--a", o.a, "exponent of x (p/q, integer or decimal)");
    sc->add_option("--b", o.b, "exponent of y");
    sc->add_option("--c", o.c, "exponent of 1-x-y");
  };
  auto add_output = [&o](CLI::App* sc) {
    sc->add_option("--format", o.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sc->add_option("--out", o.out, "write to this file instead of stdout");
  };

  auto* eval = app.add_subcommand("eval", "evaluate one polynomial of a family");
  add_params(eval);
  add_output(eval);
  eval->add_option("--family", o.family, "e, pi, sigma, tau, rot1, rot2");
  eval->add_option("--n", o.n, "total degree");
  eval->add_option("--k", o.k, "inner degree");
  eval->add_option("--at", o.at, "point x,y (repeatable)");
  eval->add_option("--grid", o.grid, "evaluate on the lattice (i/m, j/m), i+j <= m");

  auto* table = app.add_subcommand("table", "tabulate a family for all n <= nmax");
  add_params(table);
  add_output(table);
  table->add_option("--family", o.family, "e, pi, sigma, tau, rot1, rot2");
  table->add_option("--nmax", o.nmax, "largest total degree (default 3)");
  table->add_option("--at", o.at, "point x,y (repeatable)");
  table->add_option("--grid", o.grid, "evaluate on the lattice (i/m, j/m), i+j <= m");

  auto* verify = app.add_subcommand("verify", "run a verification suite and emit a report");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suites));
  add_params(verify);
  add_output(verify);
  verify->add_option("--nmax", o.nmax, "degree bound");
  verify->add_option("--N", o.N, "truncation / secondary degree bound");
  verify->add_option("--tol", o.tol, "tolerance override for floating-point checks");
  verify->add_option("--seed", o.seed, "seed for random parameters and points");

  auto* conn = app.add_subcommand("connection", "dump a connection matrix");
  add_params(conn);
  add_output(conn);
  conn->add_option("--n", o.n, "degree");
  conn->add_option("--family", o.family, "target family: pi or sigma (default pi)");
  conn->add_option("--from", o.from, "source family: e or pi (default e)");

  bool interval = false;
  auto* quad = app.add_subcommand("quadrature", "print a quadrature rule");
  add_params(quad);
  add_output(quad);
  quad->add_option("--n", o.n, "points per direction (default 8)");
  quad->add_flag("--interval", interval, "one-dimensional rule for x^a (1-x)^b on [0,1]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*table) return cmd_table(o);
    if (*verify) return cmd_verify(o);
    if (*conn) return cmd_connection(o);
    if (*quad) return cmd_quadrature(o, interval);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TrijacError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
