#pragma once
// Linear operators on the label lattice {(n,k) : 0 <= k <= n <= N}.
//
// Row (n,k) of an operator W holds the coefficients of W J_{n,k} in the
// basis J_{n',k'}:  W J_{n,k} = sum W[(n,k),(n',k')] J_{n',k'}.
// Products compose operators, so (A*B) is the row data of A∘B (which is the
// matrix product B·A). Targets beyond N are dropped, which makes rows near the
// top of the lattice inexact after products; callers compare rows n <= N - depth.

#include <map>
#include <vector>

#include "trijac/params.hpp"

namespace trijac {

class LatticeOp {
 public:
  using Row = std::map<int, Rational>;

  LatticeOp() = default;
  explicit LatticeOp(int N);
  static LatticeOp identity(int N);
  static LatticeOp scalar(int N, const Rational& s);

  int truncation() const { return N_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  static int index(int n, int k) { return n * (n + 1) / 2 + k; }
  static TriIndex label(int idx);
  bool in_range(int n, int k) const { return n >= 0 && n <= N_ && k >= 0 && k <= n; }

  // Adds c to W[(n,k),(n2,k2)]; silently drops out-of-range labels.
  void add(int n, int k, int n2, int k2, const Rational& c);
  Rational at(int n, int k, int n2, int k2) const;
  const Row& row(int idx) const { return rows_[idx]; }

  LatticeOp& operator+=(const LatticeOp& o);
  LatticeOp& operator-=(const LatticeOp& o);
  LatticeOp& operator*=(const Rational& s);
  friend LatticeOp operator+(LatticeOp a, const LatticeOp& b) { return a += b; }
  friend LatticeOp operator-(LatticeOp a, const LatticeOp& b) { return a -= b; }
  friend LatticeOp operator-(LatticeOp a) { return a *= Rational(-1); }
  friend LatticeOp operator*(LatticeOp a, const Rational& s) { return a *= s; }
  friend LatticeOp operator*(const Rational& s, LatticeOp a) { return a *= s; }
  friend LatticeOp operator*(const LatticeOp& a, const LatticeOp& b);

  // Nonzero entries in rows with n <= nmax (and, if k >= 0, that fixed k;
  // if fixed_n >= 0, that fixed n).
  std::size_t nonzero_count(int nmax, int fixed_k = -1, int fixed_n = -1) const;
  std::size_t nonzero_count() const { return nonzero_count(N_); }

 private:
  int N_ = 0;
  std::vector<Row> rows_;
};

LatticeOp commutator(const LatticeOp& a, const LatticeOp& b);
LatticeOp anticommutator(const LatticeOp& a, const LatticeOp& b);

}  // namespace trijac
