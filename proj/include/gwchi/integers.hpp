#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gwchi {

// Exact arbitrary-precision integer. Series coefficients at the maximum
// truncation order overflow 128-bit arithmetic, so everything exact is an Int.
using Int = boost::multiprecision::cpp_int;

Int factorial(unsigned n);

// The polynomial top*(top-1)*...*(top-k+1) / k!, defined for every integer
// top (integer-valued polynomial; the division is always exact).
Int binomial(const Int& top, unsigned k);

// binomial(r+n-1, n): the n-th coefficient of (1-t)^{-r}. Valid for negative
// r, where it agrees with the expansion of (1-t)^{|r|}.
Int rising_binomial(const Int& r, unsigned n);

// r*(r-1)*...*(r-m+1); m = 0 gives 1.
Int falling_factorial(const Int& r, unsigned m);

// Parity helpers for invariant formulas that only consume mod-2 data.
inline int parity(const Int& v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace gwchi
