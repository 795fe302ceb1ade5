#pragma once
// Small dense exact matrices. Products are ordinary matrix products, which is
// composition for operators acting on column vectors.

#include <optional>
#include <vector>

#include "trijac/scalar.hpp"

namespace trijac {

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static RMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  RMatrix& operator+=(const RMatrix& o);
  RMatrix& operator-=(const RMatrix& o);
  RMatrix& operator*=(const Rational& s);
  friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
  friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
  friend RMatrix operator*(RMatrix a, const Rational& s) { return a *= s; }
  friend RMatrix operator*(const Rational& s, RMatrix a) { return a *= s; }
  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend bool operator==(const RMatrix& a, const RMatrix& b) = default;

  RMatrix transpose() const;
  std::size_t nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

RMatrix commutator(const RMatrix& a, const RMatrix& b);
RMatrix anticommutator(const RMatrix& a, const RMatrix& b);

// Solves A X = B exactly by Gaussian elimination; nullopt when A is singular.
std::optional<RMatrix> solve(RMatrix A, RMatrix B);

}  // namespace trijac
