#pragma once
// Gauss-Jacobi rules on [0,1] (Golub-Welsch) and the collapsed-coordinate
// product rule on the triangle.

#include <vector>

#include "trijac/params.hpp"

namespace trijac {

struct QuadNode {
  double x = 0.0;
  double y = 0.0;  // unused by one-dimensional rules
};

struct QuadratureRule {
  std::vector<QuadNode> nodes;
  std::vector<double> weights;
  int exactDegree = 0;
  std::size_t size() const { return weights.size(); }
};

// npts-point rule for x^a (1-x)^b on [0,1], exact to degree 2 npts - 1.
QuadratureRule gauss_jacobi_01(int npts, double a, double b);

// Rule for x^a y^b (1-x-y)^c on the triangle via x = u, y = (1-u) v.
QuadratureRule triangle_rule(int npts, const TriParams<double>& p);

}  // namespace trijac
