#include "trijac/diffop.hpp"

#include <sstream>

namespace trijac {

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

PolyDiffOp PolyDiffOp::identity() { return scalar(Rational(1)); }

PolyDiffOp PolyDiffOp::scalar(const Rational& s) { return multiply(BivarPoly(s)); }

PolyDiffOp PolyDiffOp::multiply(const BivarPoly& p) { return term(0, 0, p); }

PolyDiffOp PolyDiffOp::term(int dx, int dy, const BivarPoly& p) {
  PolyDiffOp op;
  op.add_term(dx, dy, p);
  return op;
}

std::size_t PolyDiffOp::monomial_count() const {
  std::size_t n = 0;
  for (const auto& [d, p] : terms_) n += p.size();
  return n;
}

void PolyDiffOp::add_term(int dx, int dy, const BivarPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Mono{dx, dy}, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyDiffOp& PolyDiffOp::operator+=(const PolyDiffOp& o) {
  for (const auto& [d, p] : o.terms_) add_term(d.i, d.j, p);
  return *this;
}

PolyDiffOp& PolyDiffOp::operator-=(const PolyDiffOp& o) {
  for (const auto& [d, p] : o.terms_) add_term(d.i, d.j, -p);
  return *this;
}

PolyDiffOp& PolyDiffOp::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, p] : terms_) p *= s;
  return *this;
}

PolyDiffOp operator*(const PolyDiffOp& a, const PolyDiffOp& b) {
  // (p D^al)(q D^be) = sum_{g <= al} C(al,g) p (D^g q) D^{al-g+be}
  PolyDiffOp r;
  for (const auto& [al, p] : a.terms_)
    for (const auto& [be, q] : b.terms_)
      for (int gx = 0; gx <= al.i; ++gx)
        for (int gy = 0; gy <= al.j; ++gy) {
          BivarPoly dq = q.derivative(gx, gy);
          if (dq.is_zero()) continue;
          Rational f = binom(al.i, gx) * binom(al.j, gy);
          r.add_term(al.i - gx + be.i, al.j - gy + be.j, (p * dq) * f);
        }
  return r;
}

BivarPoly PolyDiffOp::apply(const BivarPoly& f) const {
  BivarPoly r;
  for (const auto& [d, p] : terms_) {
    BivarPoly df = f.derivative(d.i, d.j);
    if (!df.is_zero()) r += p * df;
  }
  return r;
}

std::string PolyDiffOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << p.str() << "]";
    if (d.i) os << "*Dx^" << d.i;
    if (d.j) os << "*Dy^" << d.j;
  }
  return os.str();
}

PolyDiffOp commutator(const PolyDiffOp& a, const PolyDiffOp& b) { return a * b - b * a; }

PolyDiffOp anticommutator(const PolyDiffOp& a, const PolyDiffOp& b) { return a * b + b * a; }

}  // namespace trijac
