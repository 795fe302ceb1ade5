#include "trijac/kernels.hpp"

#include <cmath>
#include <mutex>

#include "trijac/lattice.hpp"

namespace trijac {

void parallel_for(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  std::mutex mu;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

Eigen::MatrixXd tabulate_polys(const std::vector<BivarPoly>& polys, const QuadratureRule& rule,
                               Exec exec) {
  const auto nq = static_cast<Eigen::Index>(rule.size());
  Eigen::MatrixXd V(nq, static_cast<Eigen::Index>(polys.size()));
  parallel_for(polys.size(), exec, [&](std::size_t j) {
    for (Eigen::Index q = 0; q < nq; ++q) {
      const QuadNode& nd = rule.nodes[static_cast<std::size_t>(q)];
      V(q, static_cast<Eigen::Index>(j)) = polys[j].evaluate<double>(nd.x, nd.y);
    }
  });
  return V;
}

Eigen::MatrixXd tabulate_family(D3Element g, int nmax, const TriParams<double>& p,
                                const QuadratureRule& rule, Exec exec) {
  const int dim = (nmax + 1) * (nmax + 2) / 2;
  const auto nq = static_cast<Eigen::Index>(rule.size());
  Eigen::MatrixXd V(nq, dim);
  parallel_for(static_cast<std::size_t>(dim), exec, [&](std::size_t j) {
    const TriIndex idx = LatticeOp::label(static_cast<int>(j));
    for (Eigen::Index q = 0; q < nq; ++q) {
      const QuadNode& nd = rule.nodes[static_cast<std::size_t>(q)];
      V(q, static_cast<Eigen::Index>(j)) = tri_family_eval<double>(g, idx, p, nd.x, nd.y);
    }
  });
  return V;
}

Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& U, const Eigen::MatrixXd& V,
                              const std::vector<double>& weights, Exec exec) {
  const Eigen::Index nq = U.rows();
  const Eigen::Index ni = U.cols();
  const Eigen::Index nj = V.cols();
  Eigen::MatrixXd G(ni, nj);
  parallel_for(static_cast<std::size_t>(ni * nj), exec, [&](std::size_t flat) {
    const Eigen::Index i = static_cast<Eigen::Index>(flat) / nj;
    const Eigen::Index j = static_cast<Eigen::Index>(flat) % nj;
    double acc = 0.0;
    for (Eigen::Index q = 0; q < nq; ++q) acc += weights[static_cast<std::size_t>(q)] * U(q, i) * V(q, j);
    G(i, j) = acc;
  });
  return G;
}

Eigen::MatrixXd normalized_family_gram(D3Element g, int nmax, const TriParams<double>& p,
                                       const QuadratureRule& rule, Exec exec) {
  Eigen::MatrixXd V = tabulate_family(g, nmax, p, rule, exec);
  Eigen::MatrixXd G = weighted_gram(V, V, rule.weights, exec);
  const Eigen::Index dim = G.rows();
  Eigen::VectorXd inv_sqrt(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    inv_sqrt(i) = 1.0 / std::sqrt(tri_family_norm<double>(g, LatticeOp::label(static_cast<int>(i)), p));
  return inv_sqrt.asDiagonal() * G * inv_sqrt.asDiagonal();
}

}  // namespace trijac
