#include "doctest.h"
#include "oracles.hpp"

#include "gwchi/error.hpp"
#include "gwchi/field.hpp"
#include "gwchi/gw.hpp"
#include "gwchi/integers.hpp"
#include "gwchi/jsonio.hpp"
#include "gwchi/numtheory.hpp"
#include "gwchi/rng.hpp"

#include <cstdlib>
#include <set>
#include <vector>

using namespace gwchi;

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(binomial(Int(7), 3) == 35);
    CHECK(binomial(Int(52), 5) == 2598960);
    CHECK(binomial(Int(3), 5) == 0);
    // Generalized upper argument: C(-3, 2) = (-3)(-4)/2.
    CHECK(binomial(Int(-3), 2) == 6);
    CHECK(binomial(Int(-1), 1) == -1);
    CHECK(rising_binomial(Int(24), 2) == 300);
    CHECK(rising_binomial(Int(1), 5) == 1);
    CHECK(rising_binomial(Int(0), 3) == 0);
    CHECK(rising_binomial(Int(-2), 3) == 0);
    CHECK(falling_factorial(Int(5), 2) == 20);
    CHECK(falling_factorial(Int(-1), 3) == -6);
    CHECK(parity(Int(-3)) == 1);
    CHECK(parity(Int(4)) == 0);
}

TEST_CASE("jacobi symbol against exhaustive squares") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        std::set<std::int64_t> squares;
        for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
        for (std::int64_t a = -30; a <= 30; ++a) {
            const std::int64_t r = ((a % p) + p) % p;
            const int expected = r == 0 ? 0 : (squares.count(r) ? 1 : -1);
            CHECK(nt::jacobi(a, p) == expected);
        }
    }
    // Multiplicative in the lower argument.
    for (std::int64_t a = 1; a <= 20; ++a)
        CHECK(nt::jacobi(a, 15) == nt::jacobi(a, 3) * nt::jacobi(a, 5));
}

TEST_CASE("primality and factorization") {
    CHECK(nt::is_prime(2));
    CHECK(nt::is_prime(97));
    CHECK(nt::is_prime(7919));
    CHECK(nt::is_prime(1000003));
    CHECK_FALSE(nt::is_prime(0));
    CHECK_FALSE(nt::is_prime(1));
    CHECK_FALSE(nt::is_prime(561));  // Carmichael
    const auto f = nt::factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::int64_t, int>{2, 3});
    CHECK(f[1] == std::pair<std::int64_t, int>{3, 2});
    CHECK(f[2] == std::pair<std::int64_t, int>{5, 1});
    CHECK(nt::squarefree_part(18) == 2);
    CHECK(nt::squarefree_part(-50) == -2);
    CHECK(nt::squarefree_part(49) == 1);
    CHECK(nt::squarefree_part(1) == 1);
    CHECK(nt::squarefree_part(-1) == -1);

    std::int64_t p = 0;
    int e = 0;
    CHECK(nt::odd_prime_power(9, p, e));
    CHECK(p == 3);
    CHECK(e == 2);
    CHECK(nt::odd_prime_power(27, p, e));
    CHECK(e == 3);
    CHECK(nt::odd_prime_power(7, p, e));
    CHECK(e == 1);
    CHECK_FALSE(nt::odd_prime_power(8, p, e));
    CHECK_FALSE(nt::odd_prime_power(15, p, e));
    CHECK_FALSE(nt::odd_prime_power(1, p, e));
}

TEST_CASE("hilbert symbol hand values") {
    CHECK(nt::hilbert_symbol(-1, -1, 2) == -1);
    CHECK(nt::hilbert_symbol(-1, -1, 3) == 1);
    CHECK(nt::hilbert_symbol(2, 2, 2) == 1);
    CHECK(nt::hilbert_symbol(-1, 3, 3) == -1);
    CHECK(nt::hilbert_symbol(5, 3, 3) == -1);
    CHECK(nt::hilbert_symbol(-1, -1, nt::real_place) == -1);
    CHECK(nt::hilbert_symbol(-1, 2, nt::real_place) == 1);
}

TEST_CASE("hilbert symbol against the conic solubility search") {
    const std::vector<std::int64_t> sf = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7};
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t a : sf)
            for (std::int64_t b : sf) {
                const bool soluble = oracles::conic_soluble(a, b, p);
                CHECK(nt::hilbert_symbol(a, b, p) == (soluble ? 1 : -1));
            }
}

TEST_CASE("hilbert symbol product formula over all places") {
    const std::vector<std::int64_t> sf = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10, 15, 30};
    for (std::int64_t a : sf)
        for (std::int64_t b : sf) {
            int prod = nt::hilbert_symbol(a, b, nt::real_place) * nt::hilbert_symbol(a, b, 2);
            std::set<std::int64_t> odd;
            for (auto [p, e] : nt::factorize(std::llabs(a * b)))
                if (p != 2) odd.insert(p);
            for (std::int64_t p : odd) prod *= nt::hilbert_symbol(a, b, p);
            CHECK(prod == 1);
        }
}

TEST_CASE("square classes per field model") {
    const auto qc = FieldModel::quadratically_closed();
    const auto rc = FieldModel::real_closed();
    const auto f3 = FieldModel::finite(3);
    const auto f9 = FieldModel::finite(9);
    const auto qq = FieldModel::rationals();

    CHECK(qc.square_class(-5) == SquareClass::unit());
    CHECK(rc.square_class(7) == SquareClass::unit());
    CHECK(rc.square_class(-3) == SquareClass::of_rep(-1));
    CHECK(f3.square_class(2) == SquareClass::finite_nonsquare());
    // Over F_9 every rational integer is a square: the extension degree is even.
    CHECK(f9.square_class(2) == SquareClass::unit());
    CHECK(qq.square_class(18).rep() == 2);
    CHECK(qq.square_class(-50).rep() == -2);
    CHECK(qq.square_class(12).rep() == 3);

    CHECK(qq.mul(SquareClass::of_rep(2), SquareClass::of_rep(10)) == SquareClass::of_rep(5));
    CHECK(rc.mul(SquareClass::of_rep(-1), SquareClass::of_rep(-1)) == SquareClass::unit());
    CHECK(f3.mul(SquareClass::finite_nonsquare(), SquareClass::finite_nonsquare()) == SquareClass::unit());

    CHECK(qq.valid_class(SquareClass::of_rep(3)));
    CHECK_FALSE(qq.valid_class(SquareClass::of_rep(12)));
    CHECK_FALSE(rc.valid_class(SquareClass::of_rep(2)));
    CHECK(f3.valid_class(SquareClass::finite_nonsquare()));
    CHECK_FALSE(qq.valid_class(SquareClass::finite_nonsquare()));

    CHECK(rc.orderings() == 1);
    CHECK(qq.orderings() == 1);
    CHECK(qc.orderings() == 0);
    CHECK(f9.orderings() == 0);
    CHECK(rc.sign(SquareClass::of_rep(-1)) == -1);
    CHECK(qq.sign(SquareClass::of_rep(-2)) == -1);
    CHECK(qq.sign(SquareClass::of_rep(30)) == 1);
}

TEST_CASE("field model flags") {
    CHECK(FieldModel::from_flag("cclosed").kind() == FieldKind::QuadraticallyClosed);
    CHECK(FieldModel::from_flag("rclosed").kind() == FieldKind::RealClosed);
    CHECK(FieldModel::from_flag("q").kind() == FieldKind::Rationals);
    const auto f9 = FieldModel::from_flag("fq:9");
    CHECK(f9.kind() == FieldKind::Finite);
    CHECK(f9.q() == 9);
    CHECK(f9.characteristic() == 3);
    CHECK(f9.name() == "fq:9");
    CHECK_THROWS_AS(FieldModel::from_flag("fq:8"), error);
    CHECK_THROWS_AS(FieldModel::from_flag("fq:12"), error);
    CHECK_THROWS_AS(FieldModel::from_flag("blah"), error);
}

TEST_CASE("rank one forms multiply by square classes") {
    const auto qq = FieldModel::rationals();
    const auto a = GwElement::form(qq, 2);
    const auto b = GwElement::form(qq, 10);
    CHECK((a * b).str() == "1<5>");
    CHECK((a * a).str() == "1<1>");
    CHECK(GwElement::form(qq, 2).pow(3).str() == "1<2>");
}

TEST_CASE("string rendering") {
    const auto rc = FieldModel::real_closed();
    const auto one = GwElement::one(rc);
    const auto m = GwElement::form(rc, -1);
    CHECK((one + one + m).str() == "2<1> + 1<-1>");
    CHECK((m - one).str() == "-1<1> + 1<-1>");
    CHECK((one - one).str() == "0");
    const auto f3 = FieldModel::finite(3);
    // 2<u> folds to 2<1>: rank two forms over a finite field agree once their
    // discriminants do.
    const auto u = GwElement::form(f3, SquareClass::finite_nonsquare());
    CHECK((u + u).str() == "2<1>");
    CHECK((u + u + u).str() == "2<1> + 1<u>");
}

TEST_CASE("hyperbolic absorption") {
    const auto qq = FieldModel::rationals();
    const auto h = GwElement::hyperbolic(qq);
    CHECK(h.rank() == 2);
    CHECK(h.signature() == 0);
    CHECK(h.discriminant() == SquareClass::of_rep(-1));
    for (std::int64_t a : {1, -1, 2, -2, 3, 5, 30, -30})
        CHECK((GwElement::form(qq, a) * h) == h);
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto q = GwElement::zero(qq);
        for (int i = 0; i < 4; ++i) {
            const std::int64_t rep = rng.range(1, 10) * (rng.below(2) ? 1 : -1);
            q = rng.below(2) ? q + GwElement::form(qq, rep) : q - GwElement::form(qq, rep);
        }
        CHECK((q * h) == h.scale(q.rank()));
    }
}

TEST_CASE("rank and signature are ring homomorphisms") {
    const auto qq = FieldModel::rationals();
    Rng rng(6);
    const auto sample = [&] {
        auto q = GwElement::zero(qq);
        for (int i = 0; i < 3; ++i) {
            const std::int64_t rep = rng.range(1, 12) * (rng.below(2) ? 1 : -1);
            q = rng.below(2) ? q + GwElement::form(qq, rep) : q - GwElement::form(qq, rep);
        }
        return q;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = sample(), y = sample();
        CHECK((x + y).rank() == x.rank() + y.rank());
        CHECK((x * y).rank() == x.rank() * y.rank());
        CHECK((x + y).signature() == x.signature() + y.signature());
        CHECK((x * y).signature() == x.signature() * y.signature());
    }
}

TEST_CASE("n epsilon alternates") {
    const auto rc = FieldModel::real_closed();
    CHECK(GwElement::n_epsilon(rc, 3).str() == "2<1> + 1<-1>");
    CHECK(GwElement::n_epsilon(rc, 4).str() == "2<1> + 2<-1>");
    CHECK(GwElement::n_epsilon(rc, 0).str() == "0");
    const auto qc = FieldModel::quadratically_closed();
    CHECK(GwElement::n_epsilon(qc, 5).str() == "5<1>");
}

TEST_CASE("trace form of a quadratic extension") {
    const auto qq = FieldModel::rationals();
    const auto gauss = GwElement::trace_form_quadratic(qq, SquareClass::of_rep(-1));
    CHECK(gauss.str() == "1<2> + 1<-2>");
    CHECK(gauss.rank() == 2);
    CHECK(gauss.signature() == 0);
    CHECK(gauss.discriminant() == SquareClass::of_rep(-1));
    CHECK_THROWS_WITH_AS(GwElement::trace_form_quadratic(qq, SquareClass::of_rep(1)),
                         doctest::Contains("splits"), error);
    const auto rc = FieldModel::real_closed();
    CHECK(GwElement::trace_form_quadratic(rc, SquareClass::of_rep(-1)) == GwElement::hyperbolic(rc));
}

TEST_CASE("reconstruction from rank and signature") {
    const auto rc = FieldModel::real_closed();
    CHECK(GwElement::from_invariants(rc, 5, 1).str() == "3<1> + 2<-1>");
    CHECK(GwElement::from_invariants(rc, 0, 0).str() == "0");
    CHECK(GwElement::from_invariants(rc, -1, -3).str() == "-2<1> + 1<-1>");
    CHECK_THROWS_WITH_AS(GwElement::from_invariants(rc, 4, 1), doctest::Contains("mod 2"), error);
    const auto qc = FieldModel::quadratically_closed();
    CHECK(GwElement::from_invariants(qc, 7, {}).str() == "7<1>");
    CHECK_THROWS_AS(GwElement::from_invariants(FieldModel::finite(3), 2, {}), error);
}

TEST_CASE("rational equality is decided by the full invariant battery") {
    const auto qq = FieldModel::rationals();
    const auto form = [&](std::int64_t a) { return GwElement::form(qq, a); };
    CHECK((form(2) + form(3)) == form(5) + form(30));
    CHECK_FALSE((form(1) + form(5)) == form(2) + form(10));
    CHECK((form(1) + form(1)) == form(2) + form(2));
    // Virtual classes compare through their honest positive and negative parts.
    CHECK((form(2) - form(3)) == form(5) - form(30));
    CHECK_FALSE((form(1) - form(5)) == form(2) - form(10));
}

TEST_CASE("binary forms over small prime fields, by representation counts") {
    for (std::int64_t p : {3, 7, 11}) {
        std::int64_t u = 2;
        while (nt::jacobi(u, p) != -1) ++u;
        CHECK(oracles::rep_counts(u, u, p) == oracles::rep_counts(1, 1, p));
        CHECK(oracles::rep_counts(u, u, p) != oracles::rep_counts(1, u, p));
        const auto fp = FieldModel::finite(p);
        const auto uu = GwElement::form(fp, SquareClass::finite_nonsquare());
        CHECK((uu + uu) == GwElement::one(fp) + GwElement::one(fp));
        CHECK_FALSE((GwElement::one(fp) + uu) == GwElement::one(fp) + GwElement::one(fp));
    }
    // <1>+<1> and <2>+<2> represent every value identically often mod p.
    for (std::int64_t p : {3, 5, 7, 11, 13})
        CHECK(oracles::rep_counts(1, 1, p) == oracles::rep_counts(2, 2, p));
}

TEST_CASE("torsion detection") {
    const auto f3 = FieldModel::finite(3);
    const auto u = GwElement::form(f3, SquareClass::finite_nonsquare());
    const auto tors = u - GwElement::one(f3);
    CHECK(tors.is_torsion());
    CHECK_FALSE(tors == GwElement::zero(f3));
    CHECK((tors + tors) == GwElement::zero(f3));

    const auto rc = FieldModel::real_closed();
    const auto diff = GwElement::form(rc, -1) - GwElement::one(rc);
    CHECK_FALSE(diff.is_torsion());  // signature -2
    const auto qc = FieldModel::quadratically_closed();
    CHECK((GwElement::one(qc) - GwElement::one(qc)).is_torsion());
}

TEST_CASE("gw json shape") {
    const auto qq = FieldModel::rationals();
    const auto q = GwElement::form(qq, 2) + GwElement::form(qq, 10);
    CHECK(q.json().dump() ==
          R"({"field":"q","terms":[{"class":"2","mult":1},{"class":"10","mult":1}],"rank":2,"signature":2,"discriminant":"5"})");
    const auto f3 = FieldModel::finite(3);
    CHECK(GwElement::form(f3, SquareClass::finite_nonsquare()).json()["signature"].is_null());
}

TEST_CASE("json integers degrade to strings past 2^53") {
    CHECK(int_json(Int(9007199254740991)).is_number());
    CHECK(int_json(Int("9007199254740992")).is_string());
    CHECK(int_json(Int("9007199254740992")).get<std::string>() == "9007199254740992");
    CHECK(int_json(Int("-9007199254740992")).get<std::string>() == "-9007199254740992");
    CHECK(int_json(Int(-5)).is_number());
}

TEST_CASE("rng determinism and bounds") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(7);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 200; ++i) {
        const auto v = r.range(-1, 1);
        CHECK(v >= -1);
        CHECK(v <= 1);
        seen.insert(v);
    }
    CHECK(seen.size() == 3);
    CHECK(Rng::default_seed == 1729);
}

TEST_CASE("parse errors carry positions") {
    const parse_error e(6, "')'", "end of input");
    CHECK(std::string(e.what()) == "parse error at position 6: expected ')', found end of input");
    CHECK(e.position() == 6);
}
