#include <doctest.h>

#include "helpers.hpp"

using namespace testutil;

TEST_CASE("vector norm over weighted bases") {
    SpacePtr sp = weighted({1, 5});
    CHECK(vector_norm(vec(sp, {1, 1})) == norm_exp(0));   // max(1, 5^-1/2)
    CHECK(vector_norm(vec(sp, {0, 1})) == norm_half(1));  // ||e_2|| = 5^-1/2
    CHECK(vector_norm(Vector::zero(sp)).is_zero());
    CHECK(sp->basis_norm(1) == norm_half(1));
}

TEST_CASE("space validation") {
    CHECK_THROWS_AS(WeightedSpace::make(kP, kPrec, {}), InputError);
    CHECK_THROWS_AS(weighted({1, 0}), InputError);
    SpacePtr sp = weighted({1, 5});
    CHECK_THROWS_AS(Vector(sp, {sc(1)}), InputError);
}

TEST_CASE("the bilinear form on basis vectors") {
    SpacePtr sp = weighted({3, 5, 7});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            PadicScalar expected = i == j ? sp->omega(i) : zero();
            CHECK(f_omega(Vector::basis(sp, i), Vector::basis(sp, j)) == expected);
        }
    Vector x = vec(sp, {1, 2, 3});
    CHECK(f_omega(x, Vector::zero(sp)).is_zero());
}

TEST_CASE("isotropic vectors exist") {
    SpacePtr sp = orthonormal(2);
    PadicScalar i = PadicScalar::hensel_sqrt(-sc(1));
    Vector x(sp, {sc(1), i});
    CHECK(f_omega(x, x).is_zero());
    CHECK(is_isotropic(x));
    CHECK_FALSE(is_isotropic(Vector::basis(sp, 0)));
    CHECK_FALSE(is_isotropic(Vector::zero(sp)));
    // the norm bound is strict here
    CHECK(f_omega(x, x).abs() < vector_norm(x).pow(2));
}

TEST_CASE("pi structures") {
    SUBCASE("orthonormal base gives zero exponents and the plain dot product") {
        SpacePtr sp = orthonormal(3);
        PiStructure ps(sp, sc(5));
        for (std::size_t i = 0; i < 3; ++i) CHECK(ps.exponent(i) == 0);
        Vector x = vec(sp, {1, 2, 3}), y = vec(sp, {4, 0, 1});
        PadicScalar dot = zero();
        for (std::size_t i = 0; i < 3; ++i) dot = dot + x[i] * y[i];
        CHECK(ps.f_pi(x, y) == dot);
        CHECK(ps.pi_norm(x) == vector_norm(x));
    }
    SUBCASE("half-integer basis norms round down") {
        SpacePtr sp = weighted({1, 5});
        PiStructure ps(sp, sc(5));
        CHECK(ps.exponent(0) == 0);
        CHECK(ps.exponent(1) == 0);  // |5|^1 < 5^(-1/2) <= |5|^0
    }
    SUBCASE("inadmissible pi is rejected") {
        SpacePtr sp = orthonormal(2);
        CHECK_THROWS_AS(PiStructure(sp, sc(3)), InputError);   // |3| = 1
        CHECK_THROWS_AS(PiStructure(sp, zero()), InputError);
        CHECK_THROWS_AS(PiStructure(sp, sc(5).inv()), InputError);
    }
    SUBCASE("norm equivalence on random vectors") {
        Rng rng(3);
        for (int t = 0; t < 1000; ++t) {
            SpacePtr sp = sampling::random_space(rng, kP, kPrec, 1, 5);
            PiStructure ps(sp, sampling::random_pi(rng, kP, kPrec));
            Vector x = sampling::random_vector(rng, sp);
            LogNorm n = vector_norm(x), npi = ps.pi_norm(x);
            CHECK(ps.pi().abs() * npi <= n);
            CHECK(n <= npi);
        }
    }
}

TEST_CASE("orthogonal family check") {
    SpacePtr sp = orthonormal(3);
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < 3; ++i) basis.push_back(Vector::basis(sp, i));
    CHECK(is_orthogonal_family(basis));

    SpacePtr k2 = orthonormal(2);
    Vector a = vec(k2, {1, 0}), b = vec(k2, {1, 1});
    CHECK(is_orthogonal_family({a, b}));

    Vector x = vec(k2, {3, 2});
    CHECK_FALSE(is_orthogonal_family({x, x}));
    CHECK(is_orthogonal_family({}));
}
