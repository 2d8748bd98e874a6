#pragma once

#include "gwchi/error.hpp"
#include "gwchi/gw.hpp"
#include "gwchi/integers.hpp"
#include "gwchi/jsonio.hpp"
#include "gwchi/rng.hpp"
#include "gwchi/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gwchi {

// A pre-power structure: the series (1-t)^{-r} for every ring element r.
// base must satisfy base(0) = 1, base(r+s) = base(r)*base(s) and
// base(r) = 1 + r*t + ...; everything else about exponentiation is derived
// from it through Euler-product factorization.
template <class Ring>
struct PowerSeed {
    using Elem = typename Ring::Elem;

    Ring ring;
    std::function<TruncatedSeries<Ring>(const Elem&, unsigned)> base;
};

// Exponent vector b_1..b_N with A = prod_i (1-t^i)^{-b_i} mod t^{N+1},
// the (1-t^i)^{-b} factors taken in the sense of the seed that produced it.
template <class Ring>
struct EulerExponents {
    std::vector<typename Ring::Elem> b;  // b[i-1] is the exponent of (1-t^i)

    unsigned order() const noexcept { return static_cast<unsigned>(b.size()); }
};

// The factor (1-t^i)^{-b} of the seed: base(b) with t -> t^i.
template <class Ring>
TruncatedSeries<Ring> seed_factor(const PowerSeed<Ring>& seed, const typename Ring::Elem& b,
                                  unsigned i, unsigned order) {
    return seed.base(b, order).substitute_power(i);
}

// Factors A in 1 + t*R[[t]] as prod (1-t^i)^{-b_i}. The recursion is greedy
// and triangular: after dividing off the factors for j < i, the residual is
// 1 mod t^i and b_i is its t^i coefficient. Always solvable, any ring.
template <class Ring>
EulerExponents<Ring> euler_factorize(const TruncatedSeries<Ring>& a, const PowerSeed<Ring>& seed) {
    const Ring& ring = a.ring();
    if (!ring.eq(a.coeff(0), ring.one()))
        throw error("euler_factorize: constant term must be 1");
    const unsigned n = a.order();
    EulerExponents<Ring> out;
    out.b.reserve(n);
    TruncatedSeries<Ring> residual = a;
    for (unsigned i = 1; i <= n; ++i) {
        const auto bi = residual.coeff(i);
        out.b.push_back(bi);
        if (!ring.is_zero(bi)) residual = residual * seed_factor(seed, bi, i, n).inverse();
    }
    return out;
}

// prod_i (1-t^i)^{-b_i} to order N; left inverse of euler_factorize.
template <class Ring>
TruncatedSeries<Ring> recompose(const EulerExponents<Ring>& e, const PowerSeed<Ring>& seed, unsigned order) {
    return product_of_family<Ring>(seed.ring, order, [&](unsigned i) {
        return i <= e.order() ? seed_factor(seed, e.b[i - 1], i, order)
                              : TruncatedSeries<Ring>::unit(seed.ring, order);
    });
}

// A^m for the power structure the seed determines: factor A, multiply every
// exponent by m, recompose. Axioms (i)-(vii) follow from additivity and
// multiplicativity of the seed plus uniqueness of the factorization.
template <class Ring>
TruncatedSeries<Ring> raise(const TruncatedSeries<Ring>& a, const typename Ring::Elem& m,
                            const PowerSeed<Ring>& seed) {
    const auto e = euler_factorize(a, seed);
    const Ring& ring = a.ring();
    return product_of_family<Ring>(ring, a.order(), [&](unsigned i) {
        return seed_factor(seed, ring.mul(e.b[i - 1], m), i, a.order());
    });
}

// The power structure on Z: (1-t)^{-r} has coefficients binom(r+n-1, n),
// valid for negative r by the polynomial extension.
inline PowerSeed<IntRing> int_seed() {
    PowerSeed<IntRing> seed{IntRing{}, {}};
    seed.base = [](const Int& r, unsigned order) {
        std::vector<Int> c(order + 1);
        for (unsigned n = 0; n <= order; ++n) c[n] = rising_binomial(r, n);
        return IntSeries(IntRing{}, std::move(c));
    };
    return seed;
}

// The induced seed on a torsion-free GW model. Coefficient n of base(q) is
// pinned by its invariants:
//   rank      [t^n] (1-t)^{-rank q}
//   signature [t^n] (1-t)^{-sig q} * (1-t^2)^{-(rank q - sig q)/2}
// The signature factorization mirrors the splitting of the n-th symmetric
// power of a real variety into real points and conjugate pairs. Since
// 1 - t^2 = (1-t)(1+t) and 1+t = 1-t mod 2, rank = signature mod 2 holds
// coefficientwise, so the reconstruction stays inside the model.
// Finite and Rationals have torsion candidates that invariants cannot see;
// no unconditional structure is known there, so they are rejected.
inline PowerSeed<GwRing> gw_seed(const FieldModel& field) {
    if (field.kind() != FieldKind::QuadraticallyClosed && field.kind() != FieldKind::RealClosed)
        throw error("gw_seed: model " + field.name() +
                    " is conjecture-dependent: no torsion-free invariant reconstruction");
    PowerSeed<GwRing> seed{GwRing(field), {}};
    seed.base = [field](const GwElement& q, unsigned order) {
        const Int r = q.rank();
        std::vector<Int> rank_coeffs(order + 1);
        for (unsigned n = 0; n <= order; ++n) rank_coeffs[n] = rising_binomial(r, n);
        std::vector<GwElement> c;
        c.reserve(order + 1);
        if (field.kind() == FieldKind::QuadraticallyClosed) {
            for (unsigned n = 0; n <= order; ++n)
                c.push_back(GwElement::from_invariants(field, rank_coeffs[n], std::nullopt));
        } else {
            const Int s = q.signature();
            const IntRing z;
            std::vector<Int> real_part(order + 1), pair_part(order + 1);
            for (unsigned n = 0; n <= order; ++n) {
                real_part[n] = rising_binomial(s, n);
                pair_part[n] = rising_binomial((r - s) / 2, n);
            }
            const auto sig = IntSeries(z, std::move(real_part)) *
                             IntSeries(z, std::move(pair_part)).substitute_power(2);
            for (unsigned n = 0; n <= order; ++n)
                c.push_back(GwElement::from_invariants(field, rank_coeffs[n], sig.coeff(n)));
        }
        return GwSeries(GwRing(field), std::move(c));
    };
    return seed;
}

// Random small elements and series for the axiom suite.
inline Int sample_int(Rng& rng) { return Int(rng.range(-4, 4)); }

inline GwElement sample_gw(const FieldModel& field, Rng& rng) {
    if (field.kind() == FieldKind::QuadraticallyClosed)
        return GwElement::one(field).scale(Int(rng.range(-3, 3)));
    return GwElement::one(field).scale(Int(rng.range(-3, 3))) +
           GwElement::form(field, -1).scale(Int(rng.range(-3, 3)));
}

template <class Ring>
TruncatedSeries<Ring> sample_series(const Ring& ring, unsigned order,
                                    const std::function<typename Ring::Elem(Rng&)>& elem, Rng& rng) {
    TruncatedSeries<Ring> s = TruncatedSeries<Ring>::unit(ring, order);
    for (unsigned n = 1; n <= order; ++n) s.set_coeff(n, elem(rng));
    return s;
}

struct AxiomReport {
    std::string axiom;
    unsigned trials = 0;
    unsigned failures = 0;
    std::optional<std::string> first_counterexample;

    Json json() const {
        Json j;
        j["axiom"] = axiom;
        j["trials"] = trials;
        j["failures"] = failures;
        j["first_counterexample"] = first_counterexample ? Json(*first_counterexample) : Json(nullptr);
        return j;
    }
};

inline bool all_pass(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports)
        if (r.failures != 0) return false;
    return true;
}

inline Json axiom_report_json(const std::vector<AxiomReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(r.json());
    return arr;
}

// Checks the seven power-structure axioms on random inputs. Exact equality
// to the truncation order; failures are collected, never thrown.
template <class Ring>
std::vector<AxiomReport> axiom_suite(const PowerSeed<Ring>& seed,
                                     const std::function<typename Ring::Elem(Rng&)>& elem,
                                     unsigned trials, unsigned order, std::uint64_t rng_seed) {
    using Series = TruncatedSeries<Ring>;
    const Ring& ring = seed.ring;

    std::vector<AxiomReport> reports;
    for (const char* name : {"(i) A^0 = 1", "(ii) A^1 = A", "(iii) (A*B)^r = A^r * B^r",
                             "(iv) A^(r+s) = A^r * A^s", "(v) A^(r*s) = (A^r)^s",
                             "(vi) (1+t)^r = 1 + r*t + o(t^2)", "(vii) A(t^i)^r = (A^r)(t^i)"})
        reports.push_back(AxiomReport{name, trials, 0, std::nullopt});

    Rng rng(rng_seed);
    const auto fail = [&](std::size_t axiom, const std::string& witness) {
        ++reports[axiom].failures;
        if (!reports[axiom].first_counterexample) reports[axiom].first_counterexample = witness;
    };

    for (unsigned trial = 0; trial < trials; ++trial) {
        const Series a = sample_series<Ring>(ring, order, elem, rng);
        const Series b = sample_series<Ring>(ring, order, elem, rng);
        const auto r = elem(rng);
        const auto s = elem(rng);
        const unsigned i = 1 + static_cast<unsigned>(rng.below(3));
        const auto witness = [&] {
            return "A = " + a.str() + "; B = " + b.str() + "; r = " + ring.str(r) +
                   "; s = " + ring.str(s) + "; i = " + std::to_string(i);
        };

        if (!raise(a, ring.zero(), seed).is_one()) fail(0, witness());
        if (!(raise(a, ring.one(), seed) == a)) fail(1, witness());
        const Series ar = raise(a, r, seed);
        if (!(raise(a * b, r, seed) == ar * raise(b, r, seed))) fail(2, witness());
        if (!(raise(a, ring.add(r, s), seed) == ar * raise(a, s, seed))) fail(3, witness());
        if (!(raise(a, ring.mul(r, s), seed) == raise(ar, s, seed))) fail(4, witness());
        Series one_plus_t = Series::unit(ring, order);
        if (order >= 1) one_plus_t.set_coeff(1, ring.one());
        const Series vi = raise(one_plus_t, r, seed);
        if (!ring.eq(vi.coeff(0), ring.one()) || (order >= 1 && !ring.eq(vi.coeff(1), r)))
            fail(5, witness());
        if (!(raise(a.substitute_power(i), r, seed) == ar.substitute_power(i))) fail(6, witness());
    }
    return reports;
}

}  // namespace gwchi
