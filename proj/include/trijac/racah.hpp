#pragma once
// Racah polynomials R_m(lambda(l); alpha, beta, gamma, delta) on the lattice
// l = 0..N, their weights, norms and orthonormal functions.

#include <utility>

#include "trijac/matrix.hpp"
#include "trijac/scalar.hpp"

namespace trijac {

enum class TruncationCase { AlphaCase, BetaDeltaCase, GammaCase };

template <Scalar T>
struct RacahParams {
  T alpha{}, beta{}, gamma{}, delta{};
  int N = 0;
  TruncationCase truncation = TruncationCase::GammaCase;

  // Detects which of alpha+1, beta+delta+1, gamma+1 equals -N. Exactly one
  // must hold (double mode compares to 1e-12); otherwise InvalidParameters.
  static RacahParams make(const T& alpha, const T& beta, const T& gamma, const T& delta, int N);
  // The parameters with (alpha,beta) <-> (gamma,delta) exchanged.
  RacahParams dual() const;
};

template <Scalar T>
T racah_lambda(int ell, const RacahParams<T>& rp);

template <Scalar T>
T racah_eval(int m, int ell, const RacahParams<T>& rp);

template <Scalar T>
T racah_weight(int ell, const RacahParams<T>& rp);

// The constant K of the norm, selected by the truncation case.
template <Scalar T>
T racah_K(const RacahParams<T>& rp);

template <Scalar T>
T racah_norm(int m, const RacahParams<T>& rp);

struct OrthonormalValue {
  double value = 0.0;
  bool negative_ratio = false;  // w/M < 0: outside the positive-weight regime
};

// sign(w/M) * sqrt(|w/M|) * R_m(lambda(l)).
template <Scalar T>
OrthonormalValue racah_orthonormal(int m, int ell, const RacahParams<T>& rp);

// w(l)/M_m * R_m(lambda(l))^2: the square of the orthonormal function, exact in
// rational mode (sign-free).
template <Scalar T>
T racah_orthonormal_squared(int m, int ell, const RacahParams<T>& rp);

template <Scalar T>
struct RacahRecurrence {
  T A{};
  T C{};
};

// lambda(l) R_m = A_m R_{m+1} - (A_m + C_m) R_m + C_m R_{m-1}.
template <Scalar T>
RacahRecurrence<T> racah_recurrence(int m, const RacahParams<T>& rp);

// C_m with the denominator (2m+α+β)(2m+α+β+2) as printed in some references;
// kept only to demonstrate that it breaks the recurrence.
template <Scalar T>
T racah_recurrence_C_alternate(int m, const RacahParams<T>& rp);

template <Scalar T>
struct RacahDifference {
  T B{};
  T D{};
};

// [B(l) T+ - (B+D) + D(l) T-] R_m = m(m+α+β+1) R_m.
template <Scalar T>
RacahDifference<T> racah_difference(int ell, const RacahParams<T>& rp);

// Structure constants of the rank-one Racah algebra relations
//   [[K1,K2],K1] = 2K1^2 + 2{K1,K2} + xi K1 + eta1 K2 + zeta1
//   [K2,[K1,K2]] = 2K2^2 + 2{K1,K2} + xi K2 + eta2 K1 + zeta2
template <Scalar T>
struct RacahStructure {
  T xi{}, eta1{}, eta2{}, zeta1{}, zeta2{};
};

template <Scalar T>
RacahStructure<T> racah_structure(const RacahParams<T>& rp);

// K1 = -B T+ - D T- + (B+D), K2 = -l(l+γ+δ+1) on functions of l = 0..N.
std::pair<RMatrix, RMatrix> racah_realization(const RacahParams<Rational>& rp);

// Residuals of the two Racah-algebra relations for operators K1, K2.
template <class Op, class S>
std::pair<Op, Op> racah_relation_residuals(const Op& K1, const Op& K2, const RacahStructure<S>& st,
                                           const Op& identity) {
  Op C = K1 * K2 - K2 * K1;
  Op acomm = K1 * K2 + K2 * K1;
  Op r1 = C * K1 - K1 * C;
  r1 -= K1 * K1 * Rational(2) + acomm * Rational(2) + K1 * st.xi + K2 * st.eta1 + identity * st.zeta1;
  Op r2 = K2 * C - C * K2;
  r2 -= K2 * K2 * Rational(2) + acomm * Rational(2) + K2 * st.xi + K1 * st.eta2 + identity * st.zeta2;
  return {r1, r2};
}

}  // namespace trijac
