// Test-only ground-truth oracles. Everything here recomputes results by
// direct enumeration, deliberately sharing no code path with the library
// routines it certifies.
#pragma once

#include "gwchi/integers.hpp"

#include <cstdint>
#include <vector>

namespace gwchi::oracles {

// Invariants of Sym^n(Spec C [disjoint-union] j * Point) over a real closed
// field, computed by enumerating multisets of geometric points. The
// geometric points are {c, cbar, r_1, ..., r_j}; complex conjugation swaps
// c and cbar and fixes each r_i. A conjugation-fixed multiset of size n is
// a real point of the symmetric power; a swapped pair of multisets is one
// closed point with complex residue field, contributing a hyperbolic form.
// Hence rank = #multisets and signature = #fixed multisets.
struct OrbitCount {
    Int rank;
    Int signature;
};

inline void orbit_walk(unsigned slot, unsigned slots, unsigned remaining,
                       std::vector<unsigned>& counts, long& total, long& fixed) {
    if (slot + 1 == slots) {
        counts[slot] = remaining;
        ++total;
        if (counts[0] == counts[1]) ++fixed;
        return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
        counts[slot] = k;
        orbit_walk(slot + 1, slots, remaining - k, counts, total, fixed);
    }
}

inline OrbitCount galois_orbit_sym(unsigned j, unsigned n) {
    const unsigned slots = j + 2;
    std::vector<unsigned> counts(slots, 0);
    long total = 0, fixed = 0;
    orbit_walk(0, slots, n, counts, total, fixed);
    return {Int(total), Int(fixed)};
}

// Solubility of z^2 = a x^2 + b y^2 over Z_p for squarefree a, b, decided by
// a primitive-solution search at a modulus where every primitive solution is
// Hensel-liftable: p^3 for odd p (the worst case is z = 0 mod p with a unit
// x against v_p(a) = 1), 2^7 for p = 2 (comfortably past the 2^5 bound).
inline bool conic_soluble(std::int64_t a, std::int64_t b, std::int64_t p) {
    const std::int64_t m = p == 2 ? 128 : p * p * p;
    std::vector<char> square(static_cast<std::size_t>(m), 0);
    for (std::int64_t z = 0; z < m; ++z) square[static_cast<std::size_t>(z * z % m)] = 1;
    const auto norm = [m](std::int64_t v) { return ((v % m) + m) % m; };
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = 0; y < m; ++y) {
            if (x % p == 0 && y % p == 0) continue;
            if (square[static_cast<std::size_t>(norm(a * x % m * x + b * y % m * y))]) return true;
        }
    return false;
}

// Representation counts of the form a x^2 + b y^2 over F_p: entry v is the
// number of pairs (x, y) with a x^2 + b y^2 = v. Isomorphic forms have
// pointwise equal counts, and over F_p binary forms with distinct
// discriminant classes differ in their count at 0.
inline std::vector<long> rep_counts(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::vector<long> counts(static_cast<std::size_t>(p), 0);
    const auto norm = [p](std::int64_t v) { return ((v % p) + p) % p; };
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
            ++counts[static_cast<std::size_t>(norm(a * x * x + b * y * y))];
    return counts;
}

}  // namespace gwchi::oracles
