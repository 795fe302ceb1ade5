#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TRIJAC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

// Last whitespace-separated token of the last line.
std::string last_value(const std::string& out) {
  auto lines = split(out, '\n');
  REQUIRE(!lines.empty());
  std::istringstream ls(lines.back());
  std::string tok, last;
  while (ls >> tok) last = tok;
  return last;
}

}  // namespace

TEST_CASE("eval: constant and reflected families") {
  auto r = run("eval --family e --n 0 --k 0 --at 0.2,0.3");
  CHECK(r.code == 0);
  CHECK(std::stod(last_value(r.out)) == doctest::Approx(1.0));

  // At n = k = 1 the tau image is the e polynomial with its sign flipped.
  auto e = run("eval --family e --n 1 --k 1 --at 0.2,0.3 --a 1 --b 2 --c 3");
  auto t = run("eval --family tau --n 1 --k 1 --at 0.2,0.3 --a 1 --b 2 --c 3");
  CHECK(e.code == 0);
  CHECK(t.code == 0);
  CHECK(std::stod(last_value(t.out)) == doctest::Approx(-std::stod(last_value(e.out))));
}

TEST_CASE("eval: exact literals give exact output") {
  auto r = run("eval --family e --n 2 --k 1 --at 1/5,3/10 --a 1 --b 2 --c 3");
  CHECK(r.code == 0);
  CHECK(last_value(r.out) == "-3/50");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("verify no-such-suite").code == 2);
  CHECK(run("eval --family e --n 1 --k 2 --at 0.1,0.1").code == 2);
  CHECK(run("verify algebra --tol 0").code == 2);
}

TEST_CASE("verify: pass and fail exit codes") {
  CHECK(run("verify algebra --seed 7").code == 0);
  CHECK(run("verify hermiticity --tol 1e-300").code == 1);
}

TEST_CASE("verify: JSON report is deterministic for a seed") {
  auto a = run("verify racah --nmax 3 --seed 11");
  auto b = run("verify racah --nmax 3 --seed 11");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["version"] == "1");
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].is_array());
  CHECK(!j["checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("paper_ref"));
    CHECK(c["passed"] == true);
  }
}

TEST_CASE("connection CSV is an orthogonal matrix") {
  const int n = 6;
  auto r = run("connection --n 6 --family sigma --from pi --a 0.5 --b 0.3 --c 1.7");
  REQUIRE(r.code == 0);
  auto lines = split(r.out, '\n');
  REQUIRE(lines.size() >= n + 2);
  const auto header = split(lines[0], ',');
  REQUIRE(header.size() == n + 2);
  for (int m = 0; m <= n; ++m) CHECK(header[m + 1] == std::to_string(m));
  Eigen::MatrixXd T(n + 1, n + 1);
  for (int l = 0; l <= n; ++l) {
    const auto cells = split(lines[l + 1], ',');
    REQUIRE(cells.size() == n + 2);
    CHECK(std::stoi(cells[0]) == l);
    for (int m = 0; m <= n; ++m) T(l, m) = std::stod(cells[m + 1]);
  }
  const double err = (T.transpose() * T - Eigen::MatrixXd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff();
  CHECK(err < 1e-11);
}

TEST_CASE("quadrature CSV weights sum to the weight mass") {
  auto r = run("quadrature --n 5 --a 0 --b 0 --c 0");
  REQUIRE(r.code == 0);
  auto lines = split(r.out, '\n');
  REQUIRE(lines.size() == 26);
  CHECK(lines[0] == "x,y,w");
  double total = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) total += std::stod(split(lines[i], ',')[2]);
  CHECK(total == doctest::Approx(0.5).epsilon(1e-14));
}
