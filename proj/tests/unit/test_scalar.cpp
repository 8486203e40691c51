#include <doctest.h>

#include "helpers.hpp"

using namespace testutil;

TEST_CASE("addition tracks valuations exactly") {
    CHECK(sc(5) + sc(20) == sc(25));
    CHECK((sc(5) + sc(20)).valuation() == 2);

    PadicScalar x = sc(42);
    CHECK(x + zero() == x);
    CHECK(zero() + x == x);

    // carry raises the valuation
    PadicScalar sum = sc(2) + sc(3);
    CHECK(sum == sc(5));
    CHECK(sum.valuation() == 1);
    CHECK(sc(2).valuation() == 0);

    CHECK((x - x).is_zero());
}

TEST_CASE("multiplication, inverse, negation") {
    CHECK((sc(2) * sc(25)).valuation() == 2);  // |50| = 5^-2
    CHECK(sc(2) * sc(25) == sc(50));

    PadicScalar x = sc(7);
    CHECK(x * sc(1) == x);
    CHECK(sc(5).inv().valuation() == -1);
    CHECK(sc(5) * sc(5).inv() == sc(1));
    CHECK(-(-x) == x);
    CHECK_THROWS_AS(zero().inv(), DivisionByZeroError);
}

TEST_CASE("absolute value in the exact value group") {
    CHECK(zero().abs().is_zero());
    CHECK(sc(50).abs() == norm_exp(2));
    CHECK(sc(5).inv().abs() == norm_exp(-1));
    CHECK(sc(3).abs() == LogNorm::one());
}

TEST_CASE("log-norm arithmetic") {
    LogNorm a = norm_exp(2), b = norm_exp(-1);
    CHECK(a * b == norm_exp(1));
    CHECK(LogNorm::max(a, b) == b);  // p^1 < p^-(-1)
    CHECK(LogNorm::zero() * a == LogNorm::zero());
    CHECK(LogNorm::max(LogNorm::zero(), a) == a);
    CHECK(a.div(b) == norm_exp(3));
    CHECK(norm_half(1).exponent_string() == "1/2");
    CHECK(norm_exp(-3).exponent_string() == "-3");
    CHECK(LogNorm::zero().exponent_string() == "inf");
    CHECK(LogNorm::from_exponent_string("-1/2") == norm_half(-1));
    CHECK(LogNorm::from_exponent_string("inf").is_zero());
    CHECK(a.pow(3) == norm_exp(6));
    CHECK_THROWS_AS(a.div(LogNorm::zero()), DivisionByZeroError);
}

TEST_CASE("equality is at working precision") {
    // a deviation below p^N is invisible
    BigInt big = 1;
    for (int i = 0; i < kPrec; ++i) big *= kP;
    PadicScalar one_plus = PadicScalar::from_integer(kP, kPrec, 1 + big);
    CHECK(one_plus == sc(1));
    PadicScalar visible = PadicScalar::from_integer(kP, kPrec, 1 + kP);
    CHECK(visible != sc(1));

    CHECK_THROWS_AS(sc(1) + PadicScalar::one(7, kPrec), InputError);
}

TEST_CASE("hensel square roots") {
    SUBCASE("the lift of sqrt(-1) at precision 3") {
        PadicScalar minus_one = PadicScalar::from_integer(5, 3, -1);
        PadicScalar r = PadicScalar::hensel_sqrt(minus_one);
        CHECK(r.unit() == 57);  // 57^2 = 3249 = -1 mod 125, seed 2 mod 5
        CHECK(r * r == minus_one);
        CHECK((BigInt(57) * 57 + 1) % 125 == 0);
    }
    SUBCASE("the canonical branch through the smaller seed") {
        CHECK(PadicScalar::hensel_sqrt(sc(1)) == sc(1));
    }
    SUBCASE("non-residue is rejected") {
        // -1 is not a square mod 7: exhaust the squares
        bool residue = false;
        for (int x = 1; x < 7; ++x)
            if ((x * x) % 7 == 6) residue = true;
        CHECK_FALSE(residue);
        PadicScalar a = PadicScalar::from_integer(7, kPrec, -1);
        CHECK_THROWS_AS(PadicScalar::hensel_sqrt(a), NoSquareRootError);
    }
    SUBCASE("non-units are rejected") {
        CHECK_THROWS_AS(PadicScalar::hensel_sqrt(sc(5)), NoSquareRootError);
        CHECK_THROWS_AS(PadicScalar::hensel_sqrt(zero()), NoSquareRootError);
        CHECK_THROWS_AS(PadicScalar::hensel_sqrt(PadicScalar::one(2, 8)),
                        NoSquareRootError);
    }
    SUBCASE("random residues square back") {
        Rng rng(11);
        for (int i = 0; i < 1000; ++i) {
            PadicScalar u = sampling::random_unit(rng, kP, kPrec);
            PadicScalar a = u * u;
            PadicScalar r = PadicScalar::hensel_sqrt(a);
            CHECK(r * r == a);
        }
    }
}

TEST_CASE("strong triangle and multiplicativity on random samples") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        PadicScalar x = sampling::random_scalar(rng, kP, kPrec, -4, 4, 0.1);
        PadicScalar y = sampling::random_scalar(rng, kP, kPrec, -4, 4, 0.1);
        CHECK((x + y).abs() <= LogNorm::max(x.abs(), y.abs()));
        if (x.abs() != y.abs())
            CHECK((x + y).abs() == LogNorm::max(x.abs(), y.abs()));
        CHECK((x * y).abs() == x.abs() * y.abs());
        if (!x.is_zero()) CHECK(x * x.inv() == sc(1));
    }
}

TEST_CASE("canonical order sorts zero last") {
    CHECK(PadicScalar::canonical_less(sc(2), sc(7)));
    CHECK(PadicScalar::canonical_less(sc(7), sc(5)));  // valuation 0 before 1
    CHECK(PadicScalar::canonical_less(sc(3), zero()));
    CHECK_FALSE(PadicScalar::canonical_less(zero(), sc(3)));
    CHECK(sc(35).label() == "7*5^1");
    CHECK(sc(7).label() == "7");
    CHECK(zero().label() == "0");
}
