#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gwchi::nt {

// Jacobi symbol (a|n). n must be positive and odd.
int jacobi(std::int64_t a, std::int64_t n);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Prime factorization of n > 0 as sorted (prime, exponent) pairs.
// Trial division for small factors, Brent's rho for the rest.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Squarefree part of a != 0, sign preserved: strips every squared prime.
std::int64_t squarefree_part(std::int64_t a);

// True iff q = p^e for an odd prime p and e >= 1; reports p and e.
bool odd_prime_power(std::int64_t q, std::int64_t& p, int& e);

// The real place is selected by p = 0.
inline constexpr std::int64_t real_place = 0;

// Hilbert symbol (a, b)_p over the rationals, in {+1, -1}. a, b nonzero;
// p a prime or real_place. p = 2 uses the parity formulas in the odd parts.
int hilbert_symbol(std::int64_t a, std::int64_t b, std::int64_t p);

}  // namespace gwchi::nt
