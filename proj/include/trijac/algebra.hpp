#pragma once
// The rank-two Jacobi algebra generated by X1, X3, L1, L3, L: differential
// realization on polynomials in (x, y), difference realization on the degree
// lattice, and the exact checks tying them to the defining relations.

#include <string>
#include <vector>

#include "trijac/diffop.hpp"
#include "trijac/lattice.hpp"
#include "trijac/params.hpp"
#include "trijac/quadrature.hpp"
#include "trijac/racah.hpp"

namespace trijac {

template <class Op>
struct Realization {
  Op X1, X3, L1, L3, L;
  Op X2, L2;  // X2 = I - X1 - X3, L2 = L - L1 - L3
  Op I;
};

using DiffRealization = Realization<PolyDiffOp>;
using LatticeRealization = Realization<LatticeOp>;

struct RelationReport {
  std::string id;
  std::string description;  // the identity in words
  bool passed = false;
  double residual = 0.0;    // exact checks: nonzero monomials / entries left over
  std::string detail;
};

DiffRealization build_diff_realization(const TriParams<Rational>& p);

// Operators on {(n,k) : n <= N}; out-of-range shifts are dropped.
// Throws DegenerateDenominator when a coefficient denominator vanishes.
LatticeRealization build_lattice_realization(int N, const TriParams<Rational>& p);

// Residuals of the rank-one Jacobi relations
//   [[K1,K2],K1] = 2{K1,K2} - 2K1 - (α+β)(α+β+2)K2 + (α+β)(α+1)
//   [K2,[K1,K2]] = 2K2^2 - 2K2
template <class Op>
std::pair<Op, Op> rank1_residuals(const Op& K1, const Op& K2, const Rational& alpha,
                                  const Rational& beta, const Op& I) {
  const Rational ab = alpha + beta;
  Op C = K1 * K2 - K2 * K1;
  Op r1 = C * K1 - K1 * C;
  r1 -= (K1 * K2 + K2 * K1) * Rational(2) - K1 * Rational(2) - K2 * Rational(ab * (ab + 2)) +
        I * Rational(ab * (alpha + 1));
  Op r2 = K2 * C - C * K2;
  r2 -= K2 * K2 * Rational(2) - K2 * Rational(2);
  return {r1, r2};
}

// Same relations for K2 = D^{-1} P with D central, multiplied through by D (first)
// and D^2 (second).
template <class Op>
std::pair<Op, Op> rank1_cleared_residuals(const Op& K1, const Op& P, const Op& D,
                                          const Rational& alpha, const Rational& beta) {
  const Rational ab = alpha + beta;
  Op C = K1 * P - P * K1;
  Op r1 = C * K1 - K1 * C;
  r1 -= (K1 * P + P * K1) * Rational(2) - K1 * D * Rational(2) - P * Rational(ab * (ab + 2)) +
        D * Rational(ab * (alpha + 1));
  Op r2 = P * C - C * P;
  r2 -= P * P * Rational(2) - P * D * Rational(2);
  return {r1, r2};
}

// Every defining relation, the Jacobi-identity consequences, the implied
// identity, and the relations among L1, L2, X1, X2. Exact zero required.
std::vector<RelationReport> verify_appendix_a(const TriParams<Rational>& p, bool parallel = true);

// The same relations for the lattice operators, compared on rows n <= N.
std::vector<RelationReport> verify_appendix_a_lattice(int N, const TriParams<Rational>& p,
                                                      bool parallel = true);

// Relations as sometimes printed, expected to FAIL; used as falsification
// checks: the L1-L2 relation with -(b+c)(c+1)L2, the second ordering of
// [[L,X1],[L,X3]] with its tail sign flipped, and the L-X2 centralizer with
// the shift k(k+a+b+c).
std::vector<RelationReport> verify_printed_variants(const TriParams<Rational>& p, int nmax = 4);

// Rank-one Jacobi and Racah subalgebras generated by commuting pairs.
std::vector<RelationReport> verify_rank1_subalgebras(const TriParams<Rational>& p, int nmax = 4,
                                                     bool parallel = true);

// W J_{n,k} == sum W[(n,k),(n',k')] J_{n',k'} for W in {X1, X3, L1, L3, L}, n <= nmax.
std::vector<RelationReport> verify_intertwining(int nmax, const TriParams<Rational>& p,
                                                bool parallel = true);

// Symmetry of the generators in the orthonormal basis: lattice matrices
// conjugated by sqrt(norms), and Gram matrices of the differential operators.
std::vector<RelationReport> verify_hermiticity(int N, const TriParams<double>& p,
                                               const QuadratureRule& quad, double tol = 1e-10);

// [[A,B],C] + [[B,C],A] + [[C,A],B] = 0 for all generator triples.
std::vector<RelationReport> verify_jacobi_identity(const TriParams<Rational>& p);

}  // namespace trijac
