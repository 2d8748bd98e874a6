#include "doctest.h"
#include "oracles.hpp"

#include "gwchi/error.hpp"
#include "gwchi/power.hpp"
#include "gwchi/rng.hpp"
#include "gwchi/series.hpp"
#include "gwchi/symmetric.hpp"

#include <vector>

using namespace gwchi;

namespace {

IntSeries geometric_factor(unsigned n, unsigned order) {
    IntSeries f = IntSeries::unit(IntRing{}, order);
    if (n <= order) f.set_coeff(n, -1);
    return f.inverse();
}

IntSeries random_unit_series(Rng& rng, unsigned order, int span) {
    IntSeries s = IntSeries::unit(IntRing{}, order);
    for (unsigned n = 1; n <= order; ++n) s.set_coeff(n, Int(rng.range(-span, span)));
    return s;
}

}  // namespace

TEST_CASE("partition generating series") {
    const auto s = product_of_family<IntRing>(IntRing{}, 10,
                                              [](unsigned n) { return geometric_factor(n, 10); });
    const std::vector<long> expected = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (unsigned n = 0; n <= 10; ++n) CHECK(s.coeff(n) == expected[n]);
    CHECK(s.str() ==
          "1 + 1*t + 2*t^2 + 3*t^3 + 5*t^4 + 7*t^5 + 11*t^6 + 15*t^7 + 22*t^8 + 30*t^9 + 42*t^10 "
          "+ O(t^11)");
}

TEST_CASE("twenty fourth power of the partition product") {
    const auto s = product_of_family<IntRing>(
        IntRing{}, 3, [](unsigned n) { return geometric_factor(n, 3).pow_int(24); });
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 24);
    CHECK(s.coeff(2) == 324);
    CHECK(s.coeff(3) == 3200);
}

TEST_CASE("constant family multiplies to one") {
    const auto s = product_of_family<IntRing>(
        IntRing{}, 6, [](unsigned) { return IntSeries::unit(IntRing{}, 6); });
    CHECK(s.is_one());
}

TEST_CASE("series arithmetic") {
    const IntRing zz{};
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_unit_series(rng, 9, 4);
        const auto b = random_unit_series(rng, 9, 4);
        const auto c = random_unit_series(rng, 9, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * a.inverse() == IntSeries::unit(zz, 9));
        CHECK(a - a == IntSeries::constant(zz, Int(0), 9));
    }
}

TEST_CASE("inverse requires constant term one") {
    const IntRing zz{};
    auto s = IntSeries::constant(zz, Int(2), 4);
    CHECK_THROWS_AS(s.inverse(), error);
}

TEST_CASE("power substitution") {
    const IntRing zz{};
    auto s = IntSeries::unit(zz, 9);
    s.set_coeff(1, 1);  // 1 + t
    const auto cubed = s.substitute_power(3);
    CHECK(cubed.order() == 9);
    CHECK(cubed.coeff(3) == 1);
    CHECK(cubed.coeff(1) == 0);
    CHECK(cubed.coeff(6) == 0);
    CHECK_THROWS_AS(s.substitute_power(0), error);
}

TEST_CASE("integer powers by squaring") {
    const IntRing zz{};
    auto s = IntSeries::unit(zz, 8);
    s.set_coeff(1, 1);
    const auto p5 = s.pow_int(5);
    for (unsigned n = 0; n <= 5; ++n) CHECK(p5.coeff(n) == binomial(Int(5), n));
    auto g = IntSeries::unit(zz, 6);
    g.set_coeff(1, -1);
    const auto inv2 = g.pow_int(-2);
    for (unsigned n = 0; n <= 6; ++n) CHECK(inv2.coeff(n) == n + 1);
    CHECK(s.pow_int(0).is_one());
}

TEST_CASE("series ring mismatch is refused") {
    const GwRing rc{FieldModel::real_closed()};
    const GwRing qc{FieldModel::quadratically_closed()};
    const auto a = GwSeries::unit(rc, 4);
    const auto b = GwSeries::unit(qc, 4);
    CHECK_THROWS_WITH_AS(a + b, doctest::Contains("ring mismatch"), error);
}

TEST_CASE("coefficient access past the order is refused") {
    auto s = IntSeries::unit(IntRing{}, 4);
    CHECK_THROWS_AS(s.set_coeff(5, Int(1)), error);
    CHECK_THROWS_AS(s.coeff(5), error);
    CHECK(s.truncated(2).order() == 2);
}

TEST_CASE("factor validity in euler products") {
    CHECK_THROWS_WITH_AS(product_of_family<IntRing>(IntRing{}, 4,
                                                    [](unsigned n) {
                                                        auto f = IntSeries::unit(IntRing{}, 4);
                                                        f.set_coeff(1, Int(n));
                                                        return f;
                                                    }),
                         doctest::Contains("is not 1 mod t^2"), error);
}

TEST_CASE("gw series multiplication folds square classes") {
    const GwRing rc{FieldModel::real_closed()};
    const auto m = GwElement::form(rc.field, -1);
    auto a = GwSeries::unit(rc, 4);
    a.set_coeff(1, m);
    auto b = GwSeries::unit(rc, 4);
    b.set_coeff(1, -m);
    const auto prod = a * b;
    CHECK(prod.coeff(1).str() == "0");
    CHECK(prod.coeff(2).str() == "-1<1>");
    CHECK(prod.str() == "(1<1>) + (-1<1>)*t^2 + O(t^5)");
}

TEST_CASE("integer seed expands binomially") {
    const auto seed = int_seed();
    const auto b24 = seed.base(Int(24), 3);
    CHECK(b24.coeff(0) == 1);
    CHECK(b24.coeff(1) == 24);
    CHECK(b24.coeff(2) == 300);
    CHECK(b24.coeff(3) == 2600);
    const auto bm1 = seed.base(Int(-1), 5);
    CHECK(bm1.coeff(1) == -1);
    for (unsigned n = 2; n <= 5; ++n) CHECK(bm1.coeff(n) == 0);
}

TEST_CASE("gw seed base values") {
    const auto field = FieldModel::real_closed();
    const auto seed = gw_seed(field);
    const auto h = seed.base(GwElement::hyperbolic(field), 4);
    CHECK(h.str() ==
          "(1<1>) + (1<1> + 1<-1>)*t + (2<1> + 1<-1>)*t^2 + (2<1> + 2<-1>)*t^3 + (3<1> + "
          "2<-1>)*t^4 + O(t^5)");
    const auto neg = seed.base(-GwElement::form(field, -1), 6);
    CHECK(neg.coeff(1).str() == "-1<-1>");
    for (unsigned n = 2; n <= 6; ++n) CHECK(neg.coeff(n).str() == "0");
    const auto one = seed.base(GwElement::one(field), 4);
    for (unsigned n = 0; n <= 4; ++n) CHECK(one.coeff(n).str() == "1<1>");
}

TEST_CASE("gw seed is gated to torsion-free models") {
    CHECK_THROWS_WITH_AS(gw_seed(FieldModel::finite(9)), doctest::Contains("conjecture-dependent"),
                         error);
    CHECK_THROWS_WITH_AS(gw_seed(FieldModel::rationals()), doctest::Contains("conjecture-dependent"),
                         error);
    CHECK_NOTHROW(gw_seed(FieldModel::quadratically_closed()));
}

TEST_CASE("euler factorization round trips") {
    const auto seed = int_seed();
    {
        const auto s = product_of_family<IntRing>(IntRing{}, 8,
                                              [](unsigned n) { return geometric_factor(n, 8); });
        const auto exps = euler_factorize(s, seed);
        for (const auto& b : exps.b) CHECK(b == 1);
        CHECK(recompose(exps, seed, 8) == s);
    }
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_unit_series(rng, 8, 5);
        CHECK(recompose(euler_factorize(s, seed), seed, 8) == s);
    }
    const auto field = FieldModel::real_closed();
    const auto gws = gw_seed(field);
    const GwRing ring{field};
    for (int trial = 0; trial < 10; ++trial) {
        auto s = GwSeries::unit(ring, 6);
        for (unsigned n = 1; n <= 6; ++n) s.set_coeff(n, sample_gw(field, rng));
        CHECK(recompose(euler_factorize(s, gws), gws, 6) == s);
    }
}

TEST_CASE("raising to an integer matches plain powers") {
    const auto seed = int_seed();
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_unit_series(rng, 8, 3);
        for (int m = -4; m <= 4; ++m) CHECK(raise(s, Int(m), seed) == s.pow_int(m));
    }
    const auto field = FieldModel::real_closed();
    const auto gws = gw_seed(field);
    const GwRing ring{field};
    for (int trial = 0; trial < 5; ++trial) {
        auto s = GwSeries::unit(ring, 5);
        for (unsigned n = 1; n <= 5; ++n) s.set_coeff(n, sample_gw(field, rng));
        for (int m = -3; m <= 3; ++m)
            CHECK(raise(s, ring.from_int(Int(m)), gws) == s.pow_int(m));
    }
}

TEST_CASE("axiom suite passes for both seeds") {
    const auto int_reports = axiom_suite<IntRing>(int_seed(), sample_int, 30, 8, 99);
    CHECK(int_reports.size() == 7);
    CHECK(all_pass(int_reports));
    const auto field = FieldModel::real_closed();
    const auto gw_reports = axiom_suite<GwRing>(
        gw_seed(field), [field](Rng& rng) { return sample_gw(field, rng); }, 15, 6, 99);
    CHECK(all_pass(gw_reports));
    for (const auto& r : gw_reports) {
        CHECK(r.trials == 15);
        CHECK(r.failures == 0);
        CHECK_FALSE(r.first_counterexample.has_value());
    }
}

TEST_CASE("axiom suite is deterministic in the rng seed") {
    const auto a = axiom_suite<IntRing>(int_seed(), sample_int, 10, 6, 5);
    const auto b = axiom_suite<IntRing>(int_seed(), sample_int, 10, 6, 5);
    CHECK(axiom_report_json(a).dump() == axiom_report_json(b).dump());
    CHECK(axiom_report_json(a)[0]["axiom"] == "(i) A^0 = 1");
    CHECK(axiom_report_json(a)[0]["failures"] == 0);
    CHECK(axiom_report_json(a)[0]["first_counterexample"].is_null());
}

TEST_CASE("partitions enumerate correctly") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].parts.empty());
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(10).size() == 42);
    for (const auto& lambda : partitions_of(7)) {
        CHECK(lambda.n() == 7);
        CHECK(lambda.length() == lambda.parts.size());
    }
    Partition twos{{2, 2, 1}};
    CHECK(twos.aut_size() == 2);
    Partition ones{{1, 1, 1}};
    CHECK(ones.aut_size() == 6);
}

TEST_CASE("partition counts by length") {
    const auto c6 = partition_count_by_length(6);
    const std::vector<long> expected = {0, 1, 3, 3, 2, 1, 1};
    REQUIRE(c6.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(c6[k] == expected[k]);
    const auto c0 = partition_count_by_length(0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0] == 1);
}

TEST_CASE("configuration and symmetric ranks") {
    CHECK(conf_rank(Int(5), 2) == 20);
    CHECK(conf_rank(Int(-1), 2) == 2);
    CHECK(conf_rank(Int(3), 0) == 1);
    CHECK(sym_rank(Int(24), 2) == 300);
    CHECK(sym_rank(Int(2), 2) == 3);
    CHECK(sym_rank(Int(-1), 1) == -1);
}

TEST_CASE("symmetric power signatures") {
    CHECK(sym_signature(Int(2), Int(0), 2) == 1);
    CHECK(sym_signature(Int(1), Int(1), 5) == 1);
    CHECK(sym_signature(Int(2), Int(2), 3) == 4);
    CHECK(sym_signature(Int(0), Int(0), 4) == 0);
    CHECK_THROWS_WITH_AS(sym_signature(Int(3), Int(0), 2), doctest::Contains("mod 2"), error);
}

TEST_CASE("symmetric invariants match the galois orbit enumeration") {
    for (unsigned j = 0; j <= 3; ++j)
        for (unsigned n = 0; n <= 5; ++n) {
            const auto expected = oracles::galois_orbit_sym(j, n);
            const auto got = sym_invariants(Int(2 + j), Int(j), n);
            CHECK(got.rank == expected.rank);
            CHECK(got.signature == expected.signature);
        }
}

TEST_CASE("symmetric invariants match the seed route") {
    const auto field = FieldModel::real_closed();
    const auto seed = gw_seed(field);
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::int64_t r = rng.range(-6, 6);
        std::int64_t s = rng.range(-6, 6);
        if (((r - s) % 2 + 2) % 2 != 0) s += 1;
        const unsigned n = static_cast<unsigned>(rng.range(0, 6));
        const auto base = seed.base(GwElement::from_invariants(field, r, Int(s)), n);
        const auto inv = sym_invariants(Int(r), Int(s), n);
        CHECK(base.coeff(n).rank() == inv.rank);
        CHECK(base.coeff(n).signature() == inv.signature);
    }
}

TEST_CASE("symmetric power of a gw class") {
    const auto rc = FieldModel::real_closed();
    const auto h = GwElement::hyperbolic(rc);
    CHECK(sym_power_chi(0, h, rc).str() == "1<1>");
    CHECK(sym_power_chi(2, h, rc).str() == "2<1> + 1<-1>");
    const auto qc = FieldModel::quadratically_closed();
    CHECK(sym_power_chi(3, GwElement::from_invariants(qc, 2, {}), qc).rank() == 4);
    CHECK_THROWS_WITH_AS(sym_power_chi(2, GwElement::one(FieldModel::finite(3)), FieldModel::finite(3)),
                         doctest::Contains("conjecture-dependent"), error);
}

TEST_CASE("strata ranks resum to the symmetric rank") {
    for (std::int64_t r = -5; r <= 10; ++r)
        for (unsigned n = 0; n <= 6; ++n) CHECK(sym_delta_rank_check(Int(r), n));
}
