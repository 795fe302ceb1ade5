#pragma once
// Tabulation and Gram-matrix kernels. Each has a serial reference path and an
// OpenMP path; both sum in the same order, so results agree bit for bit.

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "trijac/params.hpp"
#include "trijac/poly.hpp"
#include "trijac/quadrature.hpp"
#include "trijac/triangle.hpp"

namespace trijac {

enum class Exec { Serial, Parallel };

// Runs body(i) for i in [0, count). The parallel path uses a dynamic schedule;
// the first exception thrown by any iteration is rethrown after the loop.
void parallel_for(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body);

// V(q, j) = polys[j](node q).
Eigen::MatrixXd tabulate_polys(const std::vector<BivarPoly>& polys, const QuadratureRule& rule,
                               Exec exec);

// V(q, index(n,k)) = J^g_{n,k}(node q) for n <= nmax, evaluated in floating point.
Eigen::MatrixXd tabulate_family(D3Element g, int nmax, const TriParams<double>& p,
                                const QuadratureRule& rule, Exec exec);

// G(i, j) = sum_q w_q U(q, i) V(q, j), summed over q in order.
Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& U, const Eigen::MatrixXd& V,
                              const std::vector<double>& weights, Exec exec);

// Gram matrix of family g divided by the norms: the identity up to rounding.
Eigen::MatrixXd normalized_family_gram(D3Element g, int nmax, const TriParams<double>& p,
                                       const QuadratureRule& rule, Exec exec);

}  // namespace trijac
