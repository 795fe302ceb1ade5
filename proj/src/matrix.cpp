#include "trijac/matrix.hpp"

#include <utility>

namespace trijac {

RMatrix RMatrix::identity(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix& RMatrix::operator+=(const RMatrix& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RMatrix& RMatrix::operator*=(const Rational& s) {
  for (auto& v : a_) v *= s;
  return *this;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  RMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int p = 0; p < a.cols_; ++p) {
      const Rational& aip = a(i, p);
      if (sgn(aip) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += aip * b(p, j);
    }
  return r;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t RMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& v : a_) n += sgn(v) != 0;
  return n;
}

RMatrix commutator(const RMatrix& a, const RMatrix& b) { return a * b - b * a; }

RMatrix anticommutator(const RMatrix& a, const RMatrix& b) { return a * b + b * a; }

std::optional<RMatrix> solve(RMatrix A, RMatrix B) {
  const int n = A.rows();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && sgn(A(piv, col)) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(col, j));
      for (int j = 0; j < B.cols(); ++j) std::swap(B(piv, j), B(col, j));
    }
    Rational inv = 1 / A(col, col);
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(A(r, col)) == 0) continue;
      Rational f = A(r, col) * inv;
      for (int j = col; j < n; ++j) A(r, j) -= f * A(col, j);
      for (int j = 0; j < B.cols(); ++j) B(r, j) -= f * B(col, j);
    }
  }
  for (int r = 0; r < n; ++r) {
    Rational inv = 1 / A(r, r);
    for (int j = 0; j < B.cols(); ++j) B(r, j) *= inv;
  }
  return B;
}

}  // namespace trijac
