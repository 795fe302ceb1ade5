#include "trijac/connection.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "trijac/errors.hpp"

namespace trijac {

namespace {

enum class Pair { PiFromE, SigmaFromE, SigmaFromPi };

Pair classify(D3Element source, D3Element target) {
  if (source == D3Element::e && target == D3Element::pi) return Pair::PiFromE;
  if (source == D3Element::e && target == D3Element::sigma) return Pair::SigmaFromE;
  if (source == D3Element::pi && target == D3Element::sigma) return Pair::SigmaFromPi;
  throw InvalidParameters("no closed-form connection between these families");
}

int parity(int v) { return (v % 2 == 0) ? 1 : -1; }

}  // namespace

template <Scalar T>
RacahParams<T> connection_racah_params(D3Element source, D3Element target, int n,
                                       const TriParams<T>& p) {
  const T gamma = from_int<T>(-n - 1);
  switch (classify(source, target)) {
    case Pair::PiFromE:
      return RacahParams<T>::make(p.b, p.c, gamma, T(p.a + p.b + (n + 1)), n);
    case Pair::SigmaFromE:
      return RacahParams<T>::make(p.c, p.b, gamma, T(p.a + p.c + (n + 1)), n);
    case Pair::SigmaFromPi:
    default:
      return RacahParams<T>::make(p.a, p.b, gamma, T(p.a + p.c + (n + 1)), n);
  }
}

int connection_phase(D3Element source, D3Element target, int n, int l, int m,
                     PhaseConvention conv) {
  Pair pair = classify(source, target);
  if (conv == PhaseConvention::Printed) return pair == Pair::SigmaFromPi ? 1 : parity(m);
  switch (pair) {
    case Pair::PiFromE: return parity(n);
    case Pair::SigmaFromE: return parity(n + l + m);
    case Pair::SigmaFromPi:
    default: return parity(n + m);
  }
}

ConnectionMatrix connection_matrix(D3Element source, D3Element target, int n,
                                   const TriParams<double>& p, PhaseConvention conv) {
  ConnectionMatrix cm;
  cm.n = n;
  cm.source = source;
  cm.target = target;
  cm.entries.resize(n + 1, n + 1);
  // Evaluated exactly at the binary values of the parameters and rounded once:
  // the double-precision 4F3 loses several digits by n = 10.
  const RacahParams<Rational> rp = connection_racah_params(source, target, n, to_rational(p));
  for (int l = 0; l <= n; ++l)
    for (int m = 0; m <= n; ++m)
      cm.entries(l, m) = connection_phase(source, target, n, l, m, conv) *
                         racah_orthonormal(m, l, rp).value;
  return cm;
}

namespace {

double reconstruct(D3Element source, D3Element target, int n, int l, const TriParams<double>& p,
                   double x, double y, PhaseConvention conv) {
  const RacahParams<Rational> rp = connection_racah_params(source, target, n, to_rational(p));
  double sum = 0.0;
  for (int m = 0; m <= n; ++m)
    sum += connection_phase(source, target, n, l, m, conv) * racah_orthonormal(m, l, rp).value *
           tri_family_eval(source, {n, m}, p, x, y) /
           std::sqrt(tri_family_norm(source, {n, m}, p));
  return std::sqrt(tri_family_norm(target, {n, l}, p)) * sum;
}

}  // namespace

double expand_pi_in_e(int n, int l, const TriParams<double>& p, double x, double y,
                      PhaseConvention conv) {
  RacahParams<double> rp = connection_racah_params(D3Element::e, D3Element::pi, n, p);
  const double F = std::sqrt(racah_weight(l, rp) * tri_family_norm(D3Element::pi, {n, l}, p));
  double sum = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double G = std::sqrt(racah_norm(m, rp) * tri_norm<double>({n, m}, p));
    sum += connection_phase(D3Element::e, D3Element::pi, n, l, m, conv) / G * racah_eval(m, l, rp) *
           tri_eval<double>({n, m}, p, x, y);
  }
  return F * sum;
}

double expand_sigma_in_e(int n, int l, const TriParams<double>& p, double x, double y,
                         PhaseConvention conv) {
  return reconstruct(D3Element::e, D3Element::sigma, n, l, p, x, y, conv);
}

double expand_sigma_in_pi(int n, int l, const TriParams<double>& p, double x, double y,
                          PhaseConvention conv) {
  return reconstruct(D3Element::pi, D3Element::sigma, n, l, p, x, y, conv);
}

ExactExpansion exact_expansion(D3Element source, D3Element target, int n,
                               const TriParams<Rational>& p) {
  // Both families span the same degree-n orthogonal space, and the degree-n
  // homogeneous parts of the source polynomials form a basis of degree-n forms.
  const int dim = n + 1;
  std::vector<BivarPoly> src(dim), tgt(dim);
  for (int m = 0; m < dim; ++m) {
    src[m] = tri_family_poly(source, {n, m}, p);
    tgt[m] = tri_family_poly(target, {n, m}, p);
  }
  // A(i, m): coefficient of x^{n-i} y^i in source_m; Bm(i, l) likewise for target_l.
  RMatrix A(dim, dim), Bm(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int m = 0; m < dim; ++m) {
      A(i, m) = src[m].coeff(n - i, i);
      Bm(i, m) = tgt[m].coeff(n - i, i);
    }
  auto X = solve(A, Bm);  // X(m, l)
  if (!X) throw TrijacError("top-degree parts of the source family are singular");
  ExactExpansion out;
  out.coeffs = X->transpose();
  out.complete = true;
  for (int l = 0; l < dim && out.complete; ++l) {
    BivarPoly combo;
    for (int m = 0; m < dim; ++m) combo += src[m] * out.coeffs(l, m);
    out.complete = (combo == tgt[l]);
  }
  return out;
}

Rational expected_coefficient_squared(D3Element source, D3Element target, int n, int l, int m,
                                      const TriParams<Rational>& p) {
  RacahParams<Rational> rp = connection_racah_params(source, target, n, p);
  return racah_orthonormal_squared(m, l, rp) *
         tri_family_norm_ratio(target, {n, l}, source, {n, m}, p);
}

template RacahParams<double> connection_racah_params<double>(D3Element, D3Element, int,
                                                             const TriParams<double>&);
template RacahParams<Rational> connection_racah_params<Rational>(D3Element, D3Element, int,
                                                                 const TriParams<Rational>&);

}  // namespace trijac
