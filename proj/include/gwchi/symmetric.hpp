#pragma once

#include "gwchi/gw.hpp"
#include "gwchi/integers.hpp"

#include <map>
#include <vector>

namespace gwchi {

// An integer partition, parts weakly decreasing and positive. Derived data
// used by orbit counting: length, part multiplicities a_i, automorphism
// group size prod a_i!.
struct Partition {
    std::vector<unsigned> parts;

    unsigned n() const {
        unsigned total = 0;
        for (unsigned p : parts) total += p;
        return total;
    }
    unsigned length() const { return static_cast<unsigned>(parts.size()); }
    std::map<unsigned, unsigned> multiplicities() const {
        std::map<unsigned, unsigned> a;
        for (unsigned p : parts) ++a[p];
        return a;
    }
    Int aut_size() const {
        Int s = 1;
        for (const auto& [part, count] : multiplicities()) s *= factorial(count);
        return s;
    }
};

// All partitions of n, largest part first within each partition.
std::vector<Partition> partitions_of(unsigned n);

// counts[k] = number of partitions of n with exactly k parts, k = 0..n.
// Computed by the P(n,k) = P(n-1,k-1) + P(n-k,k) recurrence, so it stays
// cheap at orders where full enumeration would not be.
std::vector<Int> partition_count_by_length(unsigned n);

// Euler characteristic of the ordered configuration space of m points on a
// space of Euler characteristic r: r(r-1)...(r-m+1).
Int conf_rank(const Int& r, unsigned m);

// Rank and signature of the n-th symmetric power, given rank r and
// signature s of the input:
//   rank = binom(r+n-1, n)
//   signature = [t^n] (1-t)^{-s} (1-t^2)^{-(r-s)/2}
// The signature sum runs over splittings n = a + 2b into points fixed by
// conjugation and conjugate pairs. Requires r = s mod 2.
struct SymInvariants {
    Int rank;
    Int signature;
};
Int sym_rank(const Int& r, unsigned n);
Int sym_signature(const Int& r, const Int& s, unsigned n);
SymInvariants sym_invariants(const Int& r, const Int& s, unsigned n);

// chi of the n-th symmetric power of a class with chi = q, reconstructed
// from invariants. Only torsion-free models support this unconditionally;
// Finite and Rationals are rejected.
GwElement sym_power_chi(unsigned n, const GwElement& q, const FieldModel& field);

// Checks the stratification identity
//   sum_{partitions of n} conf_rank(r, length) / aut_size = binom(r+n-1, n),
// each term exactly divisible (it counts orbits of configurations).
bool sym_delta_rank_check(const Int& r, unsigned n);

}  // namespace gwchi
