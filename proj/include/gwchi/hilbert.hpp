#pragma once

#include "gwchi/gw.hpp"
#include "gwchi/integers.hpp"
#include "gwchi/power.hpp"
#include "gwchi/series.hpp"

#include <string>
#include <vector>

namespace gwchi {

// A polynomial in the Lefschetz class L with non-negative integer
// coefficients: the class of a variety with a cell decomposition.
struct ClassPoly {
    std::vector<Int> coeffs;  // coeffs[i] multiplies L^i

    Int coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Int(0); }
};

// [Hilb^m_0(A^2)] = sum over partitions of m of L^(m - length): one cell per
// partition, of dimension m - length.
ClassPoly local_hilb_class(unsigned m);

// chi^c of a cell class: L^i contributes <-1>^i.
GwElement chi_of_class_poly(const ClassPoly& p, const FieldModel& field);

// prod_{n>=1} (1 - <-1>^{n-1} t^n)^{-1} to order N: the generating series of
// chi^c(Hilb^m_0(A^2)). Plain series inverses, so any field model works.
GwSeries local_hilb_series_gw(const FieldModel& field, unsigned order);

// Euler characteristics of a surface: e_C = rank chi^c, e_R = signature.
// An actual RealClosed chi^c value forces e_C = e_R mod 2.
struct SurfaceInvariants {
    std::int64_t e_complex = 0;
    std::int64_t e_real = 0;
};

// chi^c(X) of a surface with the given invariants, reconstructed over a
// torsion-free model. Rejects other models and parity violations.
GwElement surface_chi(const SurfaceInvariants& inv, const FieldModel& field);

// The Hilbert-scheme series sum_g chi^c(Hilb^g X) t^g, two ways.
//
// Route C: each local factor (1 - <-1>^{n-1} t^n) is raised to -chi^c(X)
// with the seed-induced power structure.
GwSeries gottsche_via_power(const SurfaceInvariants& inv, const FieldModel& field, unsigned order);
// Route A: Hilb^g X is stratified by the number of points at each cluster
// size; factor n collects m-point clusters of size n, each contributing
// Sym^m X twisted by <-1>^{m(n-1)}.
GwSeries gottsche_via_sym(const SurfaceInvariants& inv, const FieldModel& field, unsigned order);

// Classical oracles over Z, expanded directly with integer powers only.
// Rank: prod (1-t^n)^{-e_C}.
IntSeries gottsche_rank_oracle(std::int64_t e_complex, unsigned order);
// Signature: prod_r (1+(-t)^r)^{-e_R} prod_s (1-t^{2s})^{-(e_C-e_R)/2}.
// This corrects the real factor of the closed surface formula (see
// surface_formula_printed); the t^1 and t^2 coefficients of the corrected
// form match the direct real-point stratification of Hilb^1 and Hilb^2.
IntSeries gottsche_sign_oracle(std::int64_t e_complex, std::int64_t e_real, unsigned order);

// The closed surface formula exactly as printed in its source:
// prod_r (1 - <-1>^r t^r)^{-e_R} prod_s (1 - t^{2s})^{-(e_C-e_R)/2}.
// Kept verbatim for diffing: its rank at t^1 is e_R, not the e_C that
// chi^c(Hilb^1 X) = chi^c(X) forces, so it disagrees with both routes
// whenever e_R != e_C. Integer exponents only, any model.
GwSeries surface_formula_printed(const SurfaceInvariants& inv, const FieldModel& field, unsigned order);

// The classical K3 reference series (e_C = 24):
//   rank prod (1-t^n)^{-24}
//   sign prod_m (1+t^m)^{-e_R} prod_n (1-t^{2n})^{-(24-e_R)/2}
// The sign series relates to gottsche_sign_oracle(24, e_R) by t -> -t.
struct YauZaslowSeries {
    IntSeries rank;
    IntSeries sign;
};
YauZaslowSeries yau_zaslow_reference(std::int64_t e_real, unsigned order);

// Degrees where two GW series disagree, with both renderings; empty means
// exact agreement to the common order.
struct SeriesDiff {
    unsigned degree;
    std::string lhs;
    std::string rhs;
};
std::vector<SeriesDiff> diff_series(const GwSeries& a, const GwSeries& b);

}  // namespace gwchi
