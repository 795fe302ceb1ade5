#include "trijac/triangle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "trijac/errors.hpp"
#include "trijac/hyper.hpp"
#include "trijac/jacobi1d.hpp"

namespace trijac {

template <Scalar T>
T tri_eval(const TriIndex& idx, const TriParams<T>& p, const T& x, const T& y) {
  const int n = idx.n, k = idx.k;
  T outer = jacobi1d_eval(n - k, Jacobi1DParams<T>{p.a, T(p.b + p.c + (2 * k + 1))}, x);
  if constexpr (!is_exact_v<T>) {
    const double u = 1.0 - x;
    if (u != 0.0) return outer * std::pow(u, k) * jacobi1d_eval(k, Jacobi1DParams<T>{p.b, p.c}, y / u);
  }
  // (1-x)^k J_k(y/(1-x)) = sum_j c_j y^j (1-x)^{k-j}: no division, valid on x = 1 too.
  std::vector<T> c = jacobi1d_coeffs(k, Jacobi1DParams<T>{p.b, p.c});
  const T u = 1 - x;
  T inner = from_int<T>(0);
  T ypow = from_int<T>(1);
  for (int j = 0; j <= k; ++j) {
    T upow = from_int<T>(1);
    for (int t = 0; t < k - j; ++t) upow *= u;
    inner += c[j] * ypow * upow;
    ypow *= y;
  }
  return outer * inner;
}

BivarPoly tri_poly(const TriIndex& idx, const TriParams<Rational>& p) {
  const int n = idx.n, k = idx.k;
  BivarPoly outer = jacobi1d_poly(n - k, {p.a, Rational(p.b + p.c + (2 * k + 1))});
  std::vector<Rational> c = jacobi1d_coeffs(k, Jacobi1DParams<Rational>{p.b, p.c});
  const BivarPoly u = BivarPoly(Rational(1)) - BivarPoly::x();
  BivarPoly inner;
  for (int j = 0; j <= k; ++j) inner += (u.pow(k - j) * BivarPoly::monomial(0, j)) * c[j];
  return outer * inner;
}

double tri_weight(const TriParams<double>& p, double x, double y) {
  const double z = 1.0 - x - y;
  if (x < 0.0 || y < 0.0 || z < -1e-15)
    throw DomainError("point outside the triangle: (" + to_string(x) + ", " + to_string(y) + ")");
  auto factor = [](double v, double e) {
    if (v <= 0.0) {
      if (e < 0.0) throw DomainError("weight singular on the boundary");
      return e == 0.0 ? 1.0 : 0.0;
    }
    return std::pow(v, e);
  };
  return factor(x, p.a) * factor(y, p.b) * factor(std::max(z, 0.0), p.c);
}

template <Scalar T>
T tri_norm(const TriIndex& idx, const TriParams<T>& p) {
  const int n = idx.n, k = idx.k;
  return jacobi1d_norm(n - k, Jacobi1DParams<T>{p.a, T(p.b + p.c + (2 * k + 1))}) *
         jacobi1d_norm(k, Jacobi1DParams<T>{p.b, p.c});
}

namespace {

// h_{n,k} = G(num)/G(den) / ((2n+s+2)(2k+b+c+1)) with the Gamma lists below.
template <Scalar T>
void norm_gamma_lists(const TriIndex& idx, const TriParams<T>& p, std::vector<T>& num,
                      std::vector<T>& den, T& scalar) {
  const int n = idx.n, k = idx.k;
  const T s = p.sum();
  num = {T(p.a + (n - k + 1)), T(p.b + p.c + (n + k + 2)), T(p.b + (k + 1)), T(p.c + (k + 1))};
  den = {T(s + (n + k + 2)), from_int<T>(n - k + 1), T(p.b + p.c + (k + 1)), from_int<T>(k + 1)};
  scalar = T(s + (2 * n + 2)) * T(p.b + p.c + (2 * k + 1));
  if (is_zero(scalar)) throw DegenerateDenominator("triangle norm denominator vanishes");
}

}  // namespace

template <Scalar T>
T norm_ratio_between(const TriIndex& i, const TriParams<T>& pi, const TriIndex& j,
                     const TriParams<T>& pj) {
  std::vector<T> ni, di, nj, dj;
  T si, sj;
  norm_gamma_lists(i, pi, ni, di, si);
  norm_gamma_lists(j, pj, nj, dj, sj);
  ni.insert(ni.end(), dj.begin(), dj.end());
  di.insert(di.end(), nj.begin(), nj.end());
  return gamma_ratio<T>(ni, di) * sj / si;
}

template <Scalar T>
T tri_norm_ratio(const TriIndex& i, const TriIndex& j, const TriParams<T>& p) {
  return norm_ratio_between(i, p, j, p);
}

double tri_overlap(const TriIndex& idx, const TriParams<double>& p, double x, double y) {
  return std::sqrt(tri_weight(p, x, y) / tri_norm(idx, p)) * tri_eval(idx, p, x, y);
}

D3Element d3_compose(D3Element g, D3Element h) {
  using E = D3Element;
  // Rows g, columns h, both in the order e, pi, sigma, tau, R(2pi/3), R(4pi/3).
  static constexpr E table[6][6] = {
      {E::e, E::pi, E::sigma, E::tau, E::rot2pi3, E::rot4pi3},
      {E::pi, E::e, E::rot2pi3, E::rot4pi3, E::sigma, E::tau},
      {E::sigma, E::rot4pi3, E::e, E::rot2pi3, E::tau, E::pi},
      {E::tau, E::rot2pi3, E::rot4pi3, E::e, E::pi, E::sigma},
      {E::rot2pi3, E::tau, E::pi, E::sigma, E::rot4pi3, E::e},
      {E::rot4pi3, E::sigma, E::tau, E::pi, E::e, E::rot2pi3},
  };
  return table[static_cast<int>(g)][static_cast<int>(h)];
}

D3Element d3_inverse(D3Element g) {
  for (D3Element h : kD3Elements)
    if (d3_compose(g, h) == D3Element::e) return h;
  return D3Element::e;
}

std::string_view d3_name(D3Element g) {
  switch (g) {
    case D3Element::e: return "e";
    case D3Element::pi: return "pi";
    case D3Element::sigma: return "sigma";
    case D3Element::tau: return "tau";
    case D3Element::rot2pi3: return "rot1";
    case D3Element::rot4pi3: return "rot2";
  }
  return "?";
}

std::optional<D3Element> d3_parse(std::string_view name) {
  for (D3Element g : kD3Elements)
    if (d3_name(g) == name) return g;
  return std::nullopt;
}

std::array<int, 3> d3_slots(D3Element g) {
  switch (g) {
    case D3Element::e: return {0, 1, 2};
    case D3Element::pi: return {2, 1, 0};
    case D3Element::sigma: return {1, 0, 2};
    case D3Element::tau: return {0, 2, 1};
    case D3Element::rot2pi3: return {1, 2, 0};
    case D3Element::rot4pi3: return {2, 0, 1};
  }
  return {0, 1, 2};
}

FamilyReduction d3_reduce(D3Element g) {
  switch (g) {
    case D3Element::tau: return {D3Element::e, true};
    case D3Element::rot2pi3: return {D3Element::sigma, true};
    case D3Element::rot4pi3: return {D3Element::pi, true};
    default: return {g, false};
  }
}

template <Scalar T>
TriParams<T> family_params(D3Element base, const TriParams<T>& p) {
  switch (base) {
    case D3Element::pi: return {p.c, p.b, p.a};
    case D3Element::sigma: return {p.b, p.a, p.c};
    default: return p;
  }
}

template <Scalar T>
T tri_family_eval(D3Element g, const TriIndex& idx, const TriParams<T>& p, const T& x, const T& y) {
  FamilyReduction r = d3_reduce(g);
  TriParams<T> q = family_params(r.base, p);
  T v;
  switch (r.base) {
    case D3Element::pi: v = tri_eval(idx, q, T(1 - x - y), y); break;
    case D3Element::sigma: v = tri_eval(idx, q, y, x); break;
    default: v = tri_eval(idx, q, x, y); break;
  }
  if (r.phase_k && idx.k % 2 != 0) v = -v;
  return v;
}

BivarPoly tri_family_poly(D3Element g, const TriIndex& idx, const TriParams<Rational>& p) {
  FamilyReduction r = d3_reduce(g);
  BivarPoly base = tri_poly(idx, family_params(r.base, p));
  const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
  const BivarPoly z = BivarPoly(Rational(1)) - x - y;
  BivarPoly v;
  switch (r.base) {
    case D3Element::pi: v = base.substitute(z, y); break;
    case D3Element::sigma: v = base.substitute(y, x); break;
    default: v = base; break;
  }
  if (r.phase_k && idx.k % 2 != 0) v *= Rational(-1);
  return v;
}

BivarPoly tri_action_poly(D3Element g, const TriIndex& idx, const TriParams<Rational>& p) {
  const std::array<int, 3> sl = d3_slots(g);
  const std::array<Rational, 3> par{p.a, p.b, p.c};
  const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
  const std::array<BivarPoly, 3> v{x, y, BivarPoly(Rational(1)) - x - y};
  const BivarPoly base = tri_poly(idx, {par[sl[0]], par[sl[1]], par[sl[2]]});
  return base.substitute(v[sl[0]], v[sl[1]]);
}

template <Scalar T>
T tri_family_norm_ratio(D3Element g, const TriIndex& i, D3Element h, const TriIndex& j,
                        const TriParams<T>& p) {
  return norm_ratio_between(i, family_params(d3_reduce(g).base, p), j,
                            family_params(d3_reduce(h).base, p));
}

template <Scalar T>
T tri_family_norm(D3Element g, const TriIndex& idx, const TriParams<T>& p) {
  return tri_norm(idx, family_params(d3_reduce(g).base, p));
}

#define TRIJAC_INSTANTIATE(T)                                                                   \
  template T tri_eval<T>(const TriIndex&, const TriParams<T>&, const T&, const T&);             \
  template T tri_norm<T>(const TriIndex&, const TriParams<T>&);                                 \
  template T tri_norm_ratio<T>(const TriIndex&, const TriIndex&, const TriParams<T>&);          \
  template TriParams<T> family_params<T>(D3Element, const TriParams<T>&);                       \
  template T tri_family_eval<T>(D3Element, const TriIndex&, const TriParams<T>&, const T&,      \
                                const T&);                                                      \
  template T tri_family_norm<T>(D3Element, const TriIndex&, const TriParams<T>&);               \
  template T tri_family_norm_ratio<T>(D3Element, const TriIndex&, D3Element, const TriIndex&,  \
                                      const TriParams<T>&);
TRIJAC_INSTANTIATE(double)
TRIJAC_INSTANTIATE(Rational)
#undef TRIJAC_INSTANTIATE

}  // namespace trijac
