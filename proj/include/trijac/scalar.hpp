#pragma once
// Scalar plumbing shared by every module: the two number systems
// (IEEE double and exact GMP rationals) behind one set of helpers.

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

namespace trijac {

using Rational = mpq_class;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.get_d(); }

// Integer-valued test; used for pole and truncation detection.
inline bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }
inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

inline bool is_nonpositive_integer(double v) { return is_integer(v) && v <= 0.0; }
inline bool is_nonpositive_integer(const Rational& v) { return is_integer(v) && sgn(v) <= 0; }

template <Scalar T>
T from_int(long v) {
  if constexpr (is_exact_v<T>) return Rational(v);
  else return static_cast<double>(v);
}

// (-1)^n as a scalar.
template <Scalar T>
T sign_power(long n) { return from_int<T>((n % 2 == 0) ? 1 : -1); }

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Exact rational from a literal: "p/q", "-7", "0.125", "1e-3".
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// True when the literal is an integer or p/q (no decimal point or exponent).
bool is_rational_literal(std::string_view text);

std::string to_string(const Rational& v);
// Shortest round-trip text is not required; 17 significant digits always.
std::string to_string(double v);

}  // namespace trijac
