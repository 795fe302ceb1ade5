#include "trijac/hyper.hpp"

#include <cmath>
#include <string>

namespace trijac {

template <Scalar T>
T pochhammer(const T& x, int n) {
  T p = from_int<T>(1);
  for (int j = 0; j < n; ++j) p *= x + j;
  return p;
}

template <Scalar T>
T hyp_terminating(const std::vector<T>& upper, const std::vector<T>& lower, const T& arg,
                  int terms) {
  if (terms <= 0) return from_int<T>(0);
  T term = from_int<T>(1);
  T sum = term;
  for (int j = 0; j + 1 < terms; ++j) {
    T num = from_int<T>(1), den = from_int<T>(j + 1);
    for (const T& u : upper) num *= u + j;
    for (const T& l : lower) {
      T f = l + j;
      if (is_zero(f))
        throw DegenerateLowerParameter("lower parameter Pochhammer vanishes at term " +
                                       std::to_string(j + 1));
      den *= f;
    }
    term *= num;
    term *= arg;
    term /= den;
    sum += term;
  }
  return sum;
}

namespace {

void check_pole(double v) {
  if (is_nonpositive_integer(v)) throw PoleError("Gamma pole at " + to_string(v));
}
void check_pole(const Rational& v) {
  if (is_nonpositive_integer(v)) throw PoleError("Gamma pole at " + to_string(v));
}

double gamma_ratio_float(const std::vector<double>& num, const std::vector<double>& den) {
  double log_sum = 0.0;
  int sign = 1;
  auto accumulate = [&](double v, int dir) {
    check_pole(v);
    log_sum += dir * std::lgamma(v);
    // Gamma(v) < 0 exactly when v < 0 and floor(v) is odd.
    if (v < 0.0 && static_cast<long long>(std::floor(v)) % 2 != 0) sign = -sign;
  };
  for (double v : num) accumulate(v, +1);
  for (double v : den) accumulate(v, -1);
  return sign * std::exp(log_sum);
}

// Gamma(n) for a positive integer n as an exact rational.
Rational gamma_of_positive_integer(const Rational& v) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), v.get_num().get_ui() - 1);
  return Rational(f);
}

Rational gamma_ratio_exact(const std::vector<Rational>& num, const std::vector<Rational>& den) {
  for (const auto& v : num) check_pole(v);
  for (const auto& v : den) check_pole(v);
  std::vector<bool> used(den.size(), false);
  Rational result = 1;
  std::vector<Rational> left_num;
  for (const Rational& u : num) {
    bool matched = false;
    for (std::size_t j = 0; j < den.size() && !matched; ++j) {
      if (used[j]) continue;
      Rational shift = u - den[j];
      if (!is_integer(shift)) continue;
      used[j] = true;
      matched = true;
      long m = shift.get_num().get_si();
      // Gamma(d+m)/Gamma(d) = (d)_m; for m < 0 it is 1/(u)_{-m}.
      if (m >= 0) result *= pochhammer(den[j], static_cast<int>(m));
      else result /= pochhammer(u, static_cast<int>(-m));
    }
    if (!matched) left_num.push_back(u);
  }
  for (const Rational& u : left_num) {
    if (!is_integer(u)) throw IrreducibleRatio("unpaired Gamma argument " + to_string(u));
    result *= gamma_of_positive_integer(u);
  }
  for (std::size_t j = 0; j < den.size(); ++j) {
    if (used[j]) continue;
    if (!is_integer(den[j])) throw IrreducibleRatio("unpaired Gamma argument " + to_string(den[j]));
    result /= gamma_of_positive_integer(den[j]);
  }
  return result;
}

}  // namespace

template <>
double gamma_ratio<double>(const std::vector<double>& num, const std::vector<double>& den) {
  return gamma_ratio_float(num, den);
}

template <>
Rational gamma_ratio<Rational>(const std::vector<Rational>& num, const std::vector<Rational>& den) {
  return gamma_ratio_exact(num, den);
}

template double pochhammer<double>(const double&, int);
template Rational pochhammer<Rational>(const Rational&, int);
template double hyp_terminating<double>(const std::vector<double>&, const std::vector<double>&,
                                        const double&, int);
template Rational hyp_terminating<Rational>(const std::vector<Rational>&,
                                            const std::vector<Rational>&, const Rational&, int);

}  // namespace trijac
