#include "trijac/lattice.hpp"

#include <cmath>

namespace trijac {

LatticeOp::LatticeOp(int N) : N_(N), rows_(static_cast<std::size_t>((N + 1) * (N + 2) / 2)) {}

LatticeOp LatticeOp::identity(int N) { return scalar(N, Rational(1)); }

LatticeOp LatticeOp::scalar(int N, const Rational& s) {
  LatticeOp op(N);
  if (sgn(s) == 0) return op;
  for (int i = 0; i < op.dim(); ++i) op.rows_[i][i] = s;
  return op;
}

TriIndex LatticeOp::label(int idx) {
  int n = static_cast<int>((std::sqrt(8.0 * idx + 1.0) - 1.0) / 2.0);
  while (index(n + 1, 0) <= idx) ++n;
  while (index(n, 0) > idx) --n;
  return {n, idx - index(n, 0)};
}

void LatticeOp::add(int n, int k, int n2, int k2, const Rational& c) {
  if (!in_range(n, k) || !in_range(n2, k2) || sgn(c) == 0) return;
  Row& r = rows_[index(n, k)];
  int col = index(n2, k2);
  auto [it, inserted] = r.try_emplace(col, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) r.erase(it);
}

Rational LatticeOp::at(int n, int k, int n2, int k2) const {
  if (!in_range(n, k) || !in_range(n2, k2)) return 0;
  const Row& r = rows_[index(n, k)];
  auto it = r.find(index(n2, k2));
  return it == r.end() ? Rational(0) : it->second;
}

namespace {

void accumulate(LatticeOp::Row& r, int col, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = r.try_emplace(col, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) r.erase(it);
}

}  // namespace

LatticeOp& LatticeOp::operator+=(const LatticeOp& o) {
  for (int i = 0; i < dim(); ++i)
    for (const auto& [col, c] : o.rows_[i]) accumulate(rows_[i], col, c);
  return *this;
}

LatticeOp& LatticeOp::operator-=(const LatticeOp& o) {
  for (int i = 0; i < dim(); ++i)
    for (const auto& [col, c] : o.rows_[i]) accumulate(rows_[i], col, -c);
  return *this;
}

LatticeOp& LatticeOp::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& [col, c] : r) c *= s;
  return *this;
}

LatticeOp operator*(const LatticeOp& a, const LatticeOp& b) {
  // (A∘B) J_i = A (sum_p B[i,p] J_p) = sum_p B[i,p] sum_j A[p,j] J_j
  LatticeOp r(a.N_);
  Rational prod;
  for (int i = 0; i < r.dim(); ++i)
    for (const auto& [p, bc] : b.rows_[i])
      for (const auto& [j, ac] : a.rows_[p]) {
        prod = bc * ac;
        accumulate(r.rows_[i], j, prod);
      }
  return r;
}

std::size_t LatticeOp::nonzero_count(int nmax, int fixed_k, int fixed_n) const {
  std::size_t count = 0;
  for (int i = 0; i < dim(); ++i) {
    TriIndex l = label(i);
    if (l.n > nmax) continue;
    if (fixed_k >= 0 && l.k != fixed_k) continue;
    if (fixed_n >= 0 && l.n != fixed_n) continue;
    count += rows_[i].size();
  }
  return count;
}

LatticeOp commutator(const LatticeOp& a, const LatticeOp& b) { return a * b - b * a; }

LatticeOp anticommutator(const LatticeOp& a, const LatticeOp& b) { return a * b + b * a; }

}  // namespace trijac
