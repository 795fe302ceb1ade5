#include "trijac/racah.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "trijac/errors.hpp"
#include "trijac/hyper.hpp"

namespace trijac {

namespace {

bool equals_int(double v, int target) { return std::abs(v - target) <= 1e-12 * std::max(1.0, std::abs(v)); }
bool equals_int(const Rational& v, int target) { return v == target; }

template <Scalar T>
T checked_div(const T& num, const T& den, const char* what) {
  if (is_zero(den)) throw DegenerateDenominator(std::string(what) + ": vanishing denominator");
  return num / den;
}

template <Scalar T>
T factorial(int n) {
  return pochhammer(from_int<T>(1), n);
}

}  // namespace

template <Scalar T>
RacahParams<T> RacahParams<T>::make(const T& alpha, const T& beta, const T& gamma, const T& delta,
                                    int N) {
  RacahParams rp{alpha, beta, gamma, delta, N, TruncationCase::GammaCase};
  const bool ca = equals_int(T(alpha + 1), -N);
  const bool cb = equals_int(T(beta + delta + 1), -N);
  const bool cg = equals_int(T(gamma + 1), -N);
  if (int(ca) + int(cb) + int(cg) != 1)
    throw InvalidParameters("Racah parameters must satisfy exactly one truncation condition (N=" +
                            std::to_string(N) + ")");
  rp.truncation = ca ? TruncationCase::AlphaCase
                     : (cb ? TruncationCase::BetaDeltaCase : TruncationCase::GammaCase);
  return rp;
}

template <Scalar T>
RacahParams<T> RacahParams<T>::dual() const {
  return make(gamma, delta, alpha, beta, N);
}

template <Scalar T>
T racah_lambda(int ell, const RacahParams<T>& rp) {
  return T(ell * T(rp.gamma + rp.delta + (ell + 1)));
}

template <Scalar T>
T racah_eval(int m, int ell, const RacahParams<T>& rp) {
  std::vector<T> upper{from_int<T>(-m), T(rp.alpha + rp.beta + (m + 1)), from_int<T>(-ell),
                       T(rp.gamma + rp.delta + (ell + 1))};
  std::vector<T> lower{T(rp.alpha + 1), T(rp.beta + rp.delta + 1), T(rp.gamma + 1)};
  return hyp_terminating(upper, lower, from_int<T>(1), std::min(m, ell) + 1);
}

template <Scalar T>
T racah_weight(int ell, const RacahParams<T>& rp) {
  const T& al = rp.alpha; const T& be = rp.beta; const T& ga = rp.gamma; const T& de = rp.delta;
  T num = pochhammer(T(al + 1), ell) * pochhammer(T(be + de + 1), ell) * pochhammer(T(ga + 1), ell) *
          pochhammer(T(ga + de + 2), 2 * ell);
  T den = pochhammer(T(ga + de - al + 1), ell) * pochhammer(T(ga - be + 1), ell) *
          pochhammer(T(ga + de + (ell + 1)), ell) * pochhammer(T(de + 1), ell) * factorial<T>(ell);
  return checked_div(num, den, "Racah weight");
}

template <Scalar T>
T racah_K(const RacahParams<T>& rp) {
  const T& al = rp.alpha; const T& be = rp.beta; const T& ga = rp.gamma; const T& de = rp.delta;
  const int N = rp.N;
  switch (rp.truncation) {
    case TruncationCase::AlphaCase:
      return checked_div(T(pochhammer(T(-be), N) * pochhammer(T(ga + de + 2), N)),
                         T(pochhammer(T(ga - be + 1), N) * pochhammer(T(de + 1), N)), "Racah K");
    case TruncationCase::BetaDeltaCase:
      return checked_div(T(pochhammer(T(de - al), N) * pochhammer(T(ga + de + 2), N)),
                         T(pochhammer(T(ga + de - al + 1), N) * pochhammer(T(de + 1), N)), "Racah K");
    case TruncationCase::GammaCase:
    default:
      return checked_div(T(pochhammer(T(al + be + 2), N) * pochhammer(T(-de), N)),
                         T(pochhammer(T(al - de + 1), N) * pochhammer(T(be + 1), N)), "Racah K");
  }
}

template <Scalar T>
T racah_norm(int m, const RacahParams<T>& rp) {
  const T& al = rp.alpha; const T& be = rp.beta; const T& ga = rp.gamma; const T& de = rp.delta;
  T num = pochhammer(T(al + be + (m + 1)), m) * pochhammer(T(al + be - ga + 1), m) *
          pochhammer(T(al - de + 1), m) * pochhammer(T(be + 1), m) * factorial<T>(m);
  T den = pochhammer(T(al + be + 2), 2 * m) * pochhammer(T(al + 1), m) *
          pochhammer(T(be + de + 1), m) * pochhammer(T(ga + 1), m);
  return racah_K(rp) * checked_div(num, den, "Racah norm");
}

template <Scalar T>
T racah_orthonormal_squared(int m, int ell, const RacahParams<T>& rp) {
  T r = racah_eval(m, ell, rp);
  return racah_weight(ell, rp) / racah_norm(m, rp) * r * r;
}

template <Scalar T>
OrthonormalValue racah_orthonormal(int m, int ell, const RacahParams<T>& rp) {
  T ratio = racah_weight(ell, rp) / racah_norm(m, rp);
  double q = to_double(ratio);
  double r = to_double(racah_eval(m, ell, rp));
  OrthonormalValue out;
  out.negative_ratio = q < 0.0;
  out.value = (q < 0.0 ? -1.0 : 1.0) * std::sqrt(std::abs(q)) * r;
  return out;
}

template <Scalar T>
RacahRecurrence<T> racah_recurrence(int m, const RacahParams<T>& rp) {
  const T& al = rp.alpha; const T& be = rp.beta; const T& ga = rp.gamma; const T& de = rp.delta;
  RacahRecurrence<T> r;
  r.A = checked_div(T(T(al + (m + 1)) * T(al + be + (m + 1)) * T(ga + (m + 1)) * T(be + de + (m + 1))),
                    T(T(al + be + (2 * m + 1)) * T(al + be + (2 * m + 2))), "Racah A_m");
  if (m == 0) {
    r.C = from_int<T>(0);
  } else {
    r.C = checked_div(T(m * T(be + m) * T(al - de + m) * T(al + be - ga + m)),
                      T(T(al + be + 2 * m) * T(al + be + (2 * m + 1))), "Racah C_m");
  }
  return r;
}

template <Scalar T>
T racah_recurrence_C_alternate(int m, const RacahParams<T>& rp) {
  const T& al = rp.alpha; const T& be = rp.beta; const T& ga = rp.gamma; const T& de = rp.delta;
  if (m == 0) return from_int<T>(0);
  return checked_div(T(m * T(be + m) * T(al - de + m) * T(al + be - ga + m)),
                     T(T(al + be + 2 * m) * T(al + be + (2 * m + 2))), "Racah C_m");
}

template <Scalar T>
RacahDifference<T> racah_difference(int ell, const RacahParams<T>& rp) {
  const T& al = rp.alpha; const T& be = rp.beta; const T& ga = rp.gamma; const T& de = rp.delta;
  RacahDifference<T> d;
  d.B = checked_div(T(T(al + (ell + 1)) * T(be + de + (ell + 1)) * T(ga + (ell + 1)) *
                      T(ga + de + (ell + 1))),
                    T(T(ga + de + (2 * ell + 1)) * T(ga + de + (2 * ell + 2))), "Racah B");
  if (ell == 0) {
    d.D = from_int<T>(0);
  } else {
    d.D = checked_div(T(ell * T(ga + de - al + ell) * T(ga - be + ell) * T(de + ell)),
                      T(T(ga + de + 2 * ell) * T(ga + de + (2 * ell + 1))), "Racah D");
  }
  return d;
}

template <Scalar T>
RacahStructure<T> racah_structure(const RacahParams<T>& rp) {
  const T& al = rp.alpha; const T& be = rp.beta; const T& ga = rp.gamma; const T& de = rp.delta;
  RacahStructure<T> s;
  s.xi = T(be * T(de - ga - 2)) - T(al * T(2 * be + ga + de + 2)) - T(2 * T(ga + 1) * T(de + 1));
  s.eta1 = -T(T(al + be) * T(al + be + 2));
  s.eta2 = -T(T(ga + de) * T(ga + de + 2));
  s.zeta1 = T(al + 1) * T(al + be) * T(be + de + 1) * T(ga + 1);
  s.zeta2 = T(al + 1) * T(be + de + 1) * T(ga + 1) * T(ga + de);
  return s;
}

std::pair<RMatrix, RMatrix> racah_realization(const RacahParams<Rational>& rp) {
  const int n = rp.N + 1;
  RMatrix K1(n, n), K2(n, n);
  for (int l = 0; l < n; ++l) {
    RacahDifference<Rational> d = racah_difference(l, rp);
    K1(l, l) = d.B + d.D;
    if (l + 1 < n) K1(l, l + 1) = -d.B;
    if (l > 0) K1(l, l - 1) = -d.D;
    K2(l, l) = -racah_lambda(l, rp);
  }
  return {K1, K2};
}

#define TRIJAC_INSTANTIATE(T)                                                           \
  template struct RacahParams<T>;                                                       \
  template T racah_lambda<T>(int, const RacahParams<T>&);                               \
  template T racah_eval<T>(int, int, const RacahParams<T>&);                            \
  template T racah_weight<T>(int, const RacahParams<T>&);                               \
  template T racah_K<T>(const RacahParams<T>&);                                         \
  template T racah_norm<T>(int, const RacahParams<T>&);                                 \
  template T racah_orthonormal_squared<T>(int, int, const RacahParams<T>&);             \
  template OrthonormalValue racah_orthonormal<T>(int, int, const RacahParams<T>&);      \
  template RacahRecurrence<T> racah_recurrence<T>(int, const RacahParams<T>&);          \
  template T racah_recurrence_C_alternate<T>(int, const RacahParams<T>&);               \
  template RacahDifference<T> racah_difference<T>(int, const RacahParams<T>&);          \
  template RacahStructure<T> racah_structure<T>(const RacahParams<T>&);
TRIJAC_INSTANTIATE(double)
TRIJAC_INSTANTIATE(Rational)
#undef TRIJAC_INSTANTIATE

}  // namespace trijac
