#pragma once
// Change-of-basis matrices between the e, pi and sigma families, built from
// orthonormal Racah functions, and the expansions they imply.
//
// With hats denoting J / sqrt(norm) (all families share the weight
// x^a y^b (1-x-y)^c), a ConnectionMatrix T satisfies
//   target^_l = sum_m T(l, m) source^_m,   l, m = 0..n.

#include <Eigen/Core>

#include "trijac/matrix.hpp"
#include "trijac/racah.hpp"
#include "trijac/triangle.hpp"

namespace trijac {

// Verified: phases that reconstruct the target family.
// Printed: the (-1)^m phases of the closed forms as usually quoted (pi and
// sigma from e) and no phase for sigma from pi; kept for falsification tests.
enum class PhaseConvention { Verified, Printed };

struct ConnectionMatrix {
  int n = 0;
  D3Element source = D3Element::e;
  D3Element target = D3Element::pi;
  Eigen::MatrixXd entries;  // rows l (target index), columns m (source index)
};

// Racah parameters of each connection at degree n:
//   pi <- e     : (b, c, -n-1, n+1+a+b)
//   sigma <- e  : (c, b, -n-1, n+1+a+c)
//   sigma <- pi : (a, b, -n-1, n+1+a+c)
template <Scalar T>
RacahParams<T> connection_racah_params(D3Element source, D3Element target, int n,
                                       const TriParams<T>& p);

// (-1)^{...} phase of entry (l, m).
int connection_phase(D3Element source, D3Element target, int n, int l, int m,
                     PhaseConvention conv = PhaseConvention::Verified);

ConnectionMatrix connection_matrix(D3Element source, D3Element target, int n,
                                   const TriParams<double>& p,
                                   PhaseConvention conv = PhaseConvention::Verified);

inline ConnectionMatrix connection_pi(int n, const TriParams<double>& p,
                                      PhaseConvention conv = PhaseConvention::Verified) {
  return connection_matrix(D3Element::e, D3Element::pi, n, p, conv);
}
inline ConnectionMatrix connection_sigma(int n, const TriParams<double>& p,
                                         PhaseConvention conv = PhaseConvention::Verified) {
  return connection_matrix(D3Element::e, D3Element::sigma, n, p, conv);
}
inline ConnectionMatrix connection_sigma_from_pi(int n, const TriParams<double>& p,
                                                 PhaseConvention conv = PhaseConvention::Verified) {
  return connection_matrix(D3Element::pi, D3Element::sigma, n, p, conv);
}

// J^{(c,b,a)}_{n,l}(1-x-y, y) = F(l) sum_m phase / G_m R_m(lambda(l)) J^{(a,b,c)}_{n,m}(x,y)
// with F(l) = sqrt(w(l) N_l^{(b,a)} N_{n-l}^{(c,a+b+2l+1)}) and
// G_m = sqrt(M_m N_m^{(b,c)} N_{n-m}^{(a,b+c+2m+1)}).
double expand_pi_in_e(int n, int l, const TriParams<double>& p, double x, double y,
                      PhaseConvention conv = PhaseConvention::Verified);
// sigma family from the e family.
double expand_sigma_in_e(int n, int l, const TriParams<double>& p, double x, double y,
                         PhaseConvention conv = PhaseConvention::Verified);
// sigma family from the pi family.
double expand_sigma_in_pi(int n, int l, const TriParams<double>& p, double x, double y,
                          PhaseConvention conv = PhaseConvention::Verified);

// Exact expansion coefficients C with target_l = sum_m C(l, m) source_m
// (unnormalized polynomials), solved from the top-degree homogeneous parts.
// `complete` reports whether the full polynomial identity holds.
struct ExactExpansion {
  RMatrix coeffs;
  bool complete = false;
};
ExactExpansion exact_expansion(D3Element source, D3Element target, int n,
                               const TriParams<Rational>& p);

// Expected squared coefficient C(l,m)^2 = S_m(l)^2 * norm_target(l) / norm_source(m),
// exact in rational mode.
Rational expected_coefficient_squared(D3Element source, D3Element target, int n, int l, int m,
                                      const TriParams<Rational>& p);

}  // namespace trijac
