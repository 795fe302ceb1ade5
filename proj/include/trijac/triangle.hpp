#pragma once
// Two-variable Jacobi polynomials on the triangle {x, y >= 0, x + y <= 1}:
//   J_{n,k}^{(a,b,c)}(x,y) = J_{n-k}^{(a,b+c+2k+1)}(x) (1-x)^k J_k^{(b,c)}(y/(1-x)),
// orthogonal for x^a y^b (1-x-y)^c, and the six D3-related families.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "trijac/params.hpp"
#include "trijac/poly.hpp"

namespace trijac {

template <Scalar T>
T tri_eval(const TriIndex& idx, const TriParams<T>& p, const T& x, const T& y);

BivarPoly tri_poly(const TriIndex& idx, const TriParams<Rational>& p);

// x^a y^b (1-x-y)^c; DomainError outside the closed triangle or on an edge
// where a negative exponent would blow up.
double tri_weight(const TriParams<double>& p, double x, double y);

// N_{n-k}^{(a,b+c+2k+1)} N_k^{(b,c)}.
template <Scalar T>
T tri_norm(const TriIndex& idx, const TriParams<T>& p);

// h_i / h_j with all Gamma functions reduced (exact in rational mode).
template <Scalar T>
T tri_norm_ratio(const TriIndex& i, const TriIndex& j, const TriParams<T>& p);

// sqrt(weight / norm) * J_{n,k}: orthonormal under plain Lebesgue measure.
double tri_overlap(const TriIndex& idx, const TriParams<double>& p, double x, double y);

enum class D3Element { e = 0, pi, sigma, tau, rot2pi3, rot4pi3 };

inline constexpr std::array<D3Element, 6> kD3Elements{D3Element::e,     D3Element::pi,
                                                      D3Element::sigma, D3Element::tau,
                                                      D3Element::rot2pi3, D3Element::rot4pi3};

// Product g∘h from the group multiplication table.
D3Element d3_compose(D3Element g, D3Element h);
D3Element d3_inverse(D3Element g);

// CLI names: e, pi, sigma, tau, rot1 (2π/3), rot2 (4π/3).
std::string_view d3_name(D3Element g);
std::optional<D3Element> d3_parse(std::string_view name);

// Slot permutation s_g of the substitution action:
//   (g∘f)(p1,p2,p3; v1,v2,v3) = f(p[s0],p[s1],p[s2]; v[s0],v[s1],v[s2])
// on parameter triples (a,b,c) and coordinate triples (x, y, 1-x-y).
std::array<int, 3> d3_slots(D3Element g);

// Reflection whose family the given element reduces to, and the (-1)^k phase flag.
struct FamilyReduction {
  D3Element base;      // e, pi or sigma
  bool phase_k = false;
};
FamilyReduction d3_reduce(D3Element g);

// Parameters of the e-family polynomial underlying the base reflection.
template <Scalar T>
TriParams<T> family_params(D3Element base, const TriParams<T>& p);

template <Scalar T>
T tri_family_eval(D3Element g, const TriIndex& idx, const TriParams<T>& p, const T& x, const T& y);

BivarPoly tri_family_poly(D3Element g, const TriIndex& idx, const TriParams<Rational>& p);

// J_{n,k} with parameters and coordinates permuted by d3_slots(g), built by
// direct substitution (no reduction to e, pi, sigma).
BivarPoly tri_action_poly(D3Element g, const TriIndex& idx, const TriParams<Rational>& p);

// Norm of family g at index i over norm of family h at index j (Gamma-reduced).
template <Scalar T>
T tri_family_norm_ratio(D3Element g, const TriIndex& i, D3Element h, const TriIndex& j,
                        const TriParams<T>& p);

// Norm of the family under the common weight x^a y^b (1-x-y)^c.
template <Scalar T>
T tri_family_norm(D3Element g, const TriIndex& idx, const TriParams<T>& p);

}  // namespace trijac
