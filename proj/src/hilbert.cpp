#include "gwchi/hilbert.hpp"

#include "gwchi/error.hpp"
#include "gwchi/symmetric.hpp"

namespace gwchi {

namespace {

// 1 - <-1>^{n-1} t^n at the given order.
GwSeries local_factor(const FieldModel& field, unsigned n, unsigned order) {
    GwSeries f = GwSeries::unit(GwRing(field), order);
    const GwElement sign = GwElement::form(field, -1).pow(n - 1);
    if (n <= order) f.set_coeff(n, -sign);
    return f;
}

// 1 - s t^n over Z, s in {+1, -1}.
IntSeries int_factor(unsigned n, int sign, unsigned order) {
    IntSeries f = IntSeries::unit(IntRing{}, order);
    if (n <= order) f.set_coeff(n, Int(-sign));
    return f;
}

void require_parity(const SurfaceInvariants& inv) {
    if (((inv.e_complex - inv.e_real) % 2) != 0)
        throw error("surface invariants: complex and real Euler characteristics must agree mod 2");
}

}  // namespace

ClassPoly local_hilb_class(unsigned m) {
    const auto by_length = partition_count_by_length(m);
    ClassPoly p;
    p.coeffs.assign(m + 1, Int(0));
    // A partition with k parts yields a cell of dimension m - k.
    for (unsigned k = 0; k <= m; ++k) p.coeffs[m - k] += by_length[k];
    return p;
}

GwElement chi_of_class_poly(const ClassPoly& p, const FieldModel& field) {
    GwElement out = GwElement::zero(field);
    const GwElement minus_one = GwElement::form(field, -1);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i] == 0) continue;
        out = out + minus_one.pow(static_cast<unsigned>(i)).scale(p.coeffs[i]);
    }
    return out;
}

GwSeries local_hilb_series_gw(const FieldModel& field, unsigned order) {
    return product_of_family<GwRing>(GwRing(field), order, [&](unsigned n) {
        return local_factor(field, n, order).inverse();
    });
}

GwElement surface_chi(const SurfaceInvariants& inv, const FieldModel& field) {
    require_parity(inv);
    switch (field.kind()) {
        case FieldKind::QuadraticallyClosed:
            return GwElement::from_invariants(field, Int(inv.e_complex), std::nullopt);
        case FieldKind::RealClosed:
            return GwElement::from_invariants(field, Int(inv.e_complex), Int(inv.e_real));
        default:
            throw error("surface_chi: model " + field.name() +
                        " cannot reconstruct a class from (e_C, e_R)");
    }
}

GwSeries gottsche_via_power(const SurfaceInvariants& inv, const FieldModel& field, unsigned order) {
    const GwElement chi = surface_chi(inv, field);
    const auto seed = gw_seed(field);
    const GwRing ring(field);
    return product_of_family<GwRing>(ring, order, [&](unsigned n) {
        return raise(local_factor(field, n, order), -chi, seed);
    });
}

GwSeries gottsche_via_sym(const SurfaceInvariants& inv, const FieldModel& field, unsigned order) {
    require_parity(inv);
    if (field.kind() != FieldKind::QuadraticallyClosed && field.kind() != FieldKind::RealClosed)
        throw error("gottsche_via_sym: model " + field.name() +
                    " is conjecture-dependent: no torsion-free invariant reconstruction");
    const GwRing ring(field);
    const GwElement minus_one = GwElement::form(field, -1);
    const Int r = inv.e_complex;
    const Int s = inv.e_real;
    return product_of_family<GwRing>(ring, order, [&](unsigned n) {
        // 1 + sum_m <-1>^{m(n-1)} chi(Sym^m X) t^{mn}
        GwSeries f = GwSeries::unit(ring, order);
        for (unsigned m = 1; m * n <= order; ++m) {
            GwElement q =
                field.kind() == FieldKind::QuadraticallyClosed
                    ? GwElement::from_invariants(field, sym_rank(r, m), std::nullopt)
                    : GwElement::from_invariants(field, sym_rank(r, m), sym_signature(r, s, m));
            f.set_coeff(m * n, minus_one.pow(m * (n - 1)) * q);
        }
        return f;
    });
}

IntSeries gottsche_rank_oracle(std::int64_t e_complex, unsigned order) {
    return product_of_family<IntRing>(IntRing{}, order, [&](unsigned n) {
        return int_factor(n, +1, order).pow_int(Int(-e_complex));
    });
}

IntSeries gottsche_sign_oracle(std::int64_t e_complex, std::int64_t e_real, unsigned order) {
    if (((e_complex - e_real) % 2) != 0)
        throw error("sign oracle: complex and real Euler characteristics must agree mod 2");
    const IntRing z;
    // (1 + (-t)^r) = 1 - (-1)^{r-1} t^r.
    const auto real_part = product_of_family<IntRing>(z, order, [&](unsigned r) {
        return int_factor(r, r % 2 == 1 ? +1 : -1, order).pow_int(Int(-e_real));
    });
    const auto pair_part = product_of_family<IntRing>(z, order, [&](unsigned s) {
        IntSeries f = IntSeries::unit(z, order);
        if (2 * s <= order) f.set_coeff(2 * s, Int(-1));
        return f.pow_int(Int(-(e_complex - e_real) / 2));
    });
    return real_part * pair_part;
}

GwSeries surface_formula_printed(const SurfaceInvariants& inv, const FieldModel& field, unsigned order) {
    require_parity(inv);
    const GwRing ring(field);
    const auto real_part = product_of_family<GwRing>(ring, order, [&](unsigned r) {
        // 1 - <-1>^r t^r, verbatim (note the exponent r, not r-1).
        GwSeries f = GwSeries::unit(ring, order);
        if (r <= order) f.set_coeff(r, -GwElement::form(field, -1).pow(r));
        return f.pow_int(Int(-inv.e_real));
    });
    const auto pair_part = product_of_family<GwRing>(ring, order, [&](unsigned s) {
        GwSeries f = GwSeries::unit(ring, order);
        if (2 * s <= order) f.set_coeff(2 * s, -GwElement::one(field));
        return f.pow_int(Int(-(inv.e_complex - inv.e_real) / 2));
    });
    return real_part * pair_part;
}

YauZaslowSeries yau_zaslow_reference(std::int64_t e_real, unsigned order) {
    const IntRing z;
    auto rank = gottsche_rank_oracle(24, order);
    const auto real_part = product_of_family<IntRing>(z, order, [&](unsigned m) {
        return int_factor(m, -1, order).pow_int(Int(-e_real));
    });
    const auto pair_part = product_of_family<IntRing>(z, order, [&](unsigned n) {
        IntSeries f = IntSeries::unit(z, order);
        if (2 * n <= order) f.set_coeff(2 * n, Int(-1));
        return f.pow_int(Int(-(24 - e_real) / 2));
    });
    return {std::move(rank), real_part * pair_part};
}

std::vector<SeriesDiff> diff_series(const GwSeries& a, const GwSeries& b) {
    std::vector<SeriesDiff> out;
    const unsigned order = a.order() < b.order() ? a.order() : b.order();
    for (unsigned n = 0; n <= order; ++n) {
        if (!is_equal(a.coeff(n), b.coeff(n)))
            out.push_back({n, a.coeff(n).str(), b.coeff(n).str()});
    }
    return out;
}

}  // namespace gwchi
