#pragma once
// Pochhammer symbols, terminating hypergeometric sums and Gamma ratios.

#include <vector>

#include "trijac/errors.hpp"
#include "trijac/scalar.hpp"

namespace trijac {

// Rising factorial x (x+1) ... (x+n-1); 1 when n == 0.
template <Scalar T>
T pochhammer(const T& x, int n);

// sum_{j<terms} prod (upper)_j / prod (lower)_j * arg^j / j!, by forward term ratios.
// Throws DegenerateLowerParameter if a lower Pochhammer vanishes inside the range.
template <Scalar T>
T hyp_terminating(const std::vector<T>& upper, const std::vector<T>& lower, const T& arg,
                  int terms);

// prod Gamma(num_i) / prod Gamma(den_j).
// double: log-Gamma with sign tracking.
// Rational: arguments are paired by integer shifts and reduced to Pochhammer
// products; unpaired positive integers become factorials. Anything else throws
// IrreducibleRatio. Nonpositive integer arguments throw PoleError in both modes.
template <Scalar T>
T gamma_ratio(const std::vector<T>& num, const std::vector<T>& den);

}  // namespace trijac
