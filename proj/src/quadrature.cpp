#include "trijac/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

#include "trijac/errors.hpp"
#include "trijac/jacobi1d.hpp"

namespace trijac {

QuadratureRule gauss_jacobi_01(int npts, double a, double b) {
  if (!(a > -1.0) || !(b > -1.0)) throw PoleError("Gauss-Jacobi needs a, b > -1");
  if (npts < 1) throw InvalidParameters("npts must be positive");
  const Jacobi1DParams<double> p{a, b};

  // x J_n = A_n J_{n+1} + B_n J_n + C_n J_{n-1}, read off (1-2x) J_n = c+ J_{n+1} + c0 J_n + c- J_{n-1}.
  // The n = 0 row uses the cancelled forms c+ = 2/(a+b+2), c0 = (b-a)/(a+b+2).
  Eigen::VectorXd diag(npts), sub(std::max(npts - 1, 0));
  std::vector<double> A(npts), C(npts);
  for (int n = 0; n < npts; ++n) {
    double cp, c0;
    if (n == 0) {
      cp = 2.0 / (a + b + 2.0);
      c0 = (b - a) / (a + b + 2.0);
    } else {
      RecurrenceCoeffs<double> r = jacobi1d_recurrence(n, p);
      cp = r.cPlus;
      c0 = r.cZero;
      C[n] = -r.cMinus / 2.0;
    }
    A[n] = -cp / 2.0;
    diag[n] = (1.0 - c0) / 2.0;
  }
  for (int n = 0; n + 1 < npts; ++n) sub[n] = std::sqrt(A[n] * C[n + 1]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) throw TrijacError("Golub-Welsch eigen-solve failed");

  const double mu0 = jacobi1d_norm(0, p);
  QuadratureRule rule;
  rule.exactDegree = 2 * npts - 1;
  rule.nodes.resize(npts);
  rule.weights.resize(npts);
  for (int i = 0; i < npts; ++i) {
    const double v0 = eig.eigenvectors()(0, i);
    rule.nodes[i] = {eig.eigenvalues()[i], 0.0};
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

QuadratureRule triangle_rule(int npts, const TriParams<double>& p) {
  if (!(p.a > -1.0) || !(p.b > -1.0) || !(p.c > -1.0))
    throw PoleError("triangle rule needs a, b, c > -1");
  QuadratureRule ru = gauss_jacobi_01(npts, p.a, p.b + p.c + 1.0);
  QuadratureRule rv = gauss_jacobi_01(npts, p.b, p.c);
  QuadratureRule rule;
  rule.exactDegree = 2 * npts - 1;
  rule.nodes.reserve(static_cast<std::size_t>(npts * npts));
  rule.weights.reserve(static_cast<std::size_t>(npts * npts));
  for (int i = 0; i < npts; ++i)
    for (int j = 0; j < npts; ++j) {
      const double u = ru.nodes[i].x, v = rv.nodes[j].x;
      rule.nodes.push_back({u, (1.0 - u) * v});
      rule.weights.push_back(ru.weights[i] * rv.weights[j]);
    }
  return rule;
}

}  // namespace trijac
