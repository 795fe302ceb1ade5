#include "trijac/poly.hpp"

#include <algorithm>
#include <sstream>

namespace trijac {

BivarPoly::BivarPoly(const Rational& constant) { add_term(0, 0, constant); }

BivarPoly BivarPoly::monomial(int i, int j, const Rational& coef) {
  BivarPoly p;
  p.add_term(i, j, coef);
  return p;
}

BivarPoly BivarPoly::univariate_x(const std::vector<Rational>& coeffs) {
  BivarPoly p;
  for (std::size_t j = 0; j < coeffs.size(); ++j) p.add_term(static_cast<int>(j), 0, coeffs[j]);
  return p;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.i + m.j);
  return d;
}

Rational BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(int i, int j, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(Mono{i, j}, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.i, m.j, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.i, m.j, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma.i + mb.i, ma.j + mb.j, prod);
    }
  return r;
}

BivarPoly BivarPoly::pow(int e) const {
  BivarPoly r(Rational(1)), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

BivarPoly BivarPoly::derivative(int dx, int dy) const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.i < dx || m.j < dy) continue;
    Rational f = c;
    for (int t = 0; t < dx; ++t) f *= m.i - t;
    for (int t = 0; t < dy; ++t) f *= m.j - t;
    r.add_term(m.i - dx, m.j - dy, f);
  }
  return r;
}

BivarPoly BivarPoly::substitute(const BivarPoly& px, const BivarPoly& py) const {
  int max_i = 0, max_j = 0;
  for (const auto& [m, c] : terms_) {
    max_i = std::max(max_i, m.i);
    max_j = std::max(max_j, m.j);
  }
  std::vector<BivarPoly> xp(max_i + 1), yp(max_j + 1);
  xp[0] = yp[0] = BivarPoly(Rational(1));
  for (int t = 1; t <= max_i; ++t) xp[t] = xp[t - 1] * px;
  for (int t = 1; t <= max_j; ++t) yp[t] = yp[t - 1] * py;
  BivarPoly r;
  for (const auto& [m, c] : terms_) r += (xp[m.i] * yp[m.j]) * c;
  return r;
}

BivarPoly BivarPoly::homogeneous_part(int d) const {
  BivarPoly r;
  for (const auto& [m, c] : terms_)
    if (m.i + m.j == d) r.add_term(m.i, m.j, c);
  return r;
}

template <Scalar T>
T BivarPoly::evaluate(const T& x, const T& y) const {
  T sum = from_int<T>(0);
  for (const auto& [m, c] : terms_) {
    T t;
    if constexpr (is_exact_v<T>) t = c;
    else t = c.get_d();
    for (int k = 0; k < m.i; ++k) t *= x;
    for (int k = 0; k < m.j; ++k) t *= y;
    sum += t;
  }
  return sum;
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (m.i) os << "*x^" << m.i;
    if (m.j) os << "*y^" << m.j;
  }
  return os.str();
}

template double BivarPoly::evaluate<double>(const double&, const double&) const;
template Rational BivarPoly::evaluate<Rational>(const Rational&, const Rational&) const;

}  // namespace trijac
