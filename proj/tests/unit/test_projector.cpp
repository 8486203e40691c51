#include <doctest.h>

#include "helpers.hpp"

using namespace testutil;

TEST_CASE("idempotent diagonal classification") {
    SpacePtr sp = orthonormal(3);
    auto check = is_idempotent_diagonal(diag(sp, {1, 0, 1}));
    CHECK(check.is_projector());
    CHECK(check.subset == IndexSubset{0, 2});

    CHECK(is_idempotent_diagonal(diag(sp, {1, 2, 0})).status ==
          IdempotentCheck::Status::not_idempotent);

    auto zero_check = is_idempotent_diagonal(Operator::zero(sp));
    CHECK(zero_check.is_projector());
    CHECK(zero_check.subset.empty());

    CHECK(is_idempotent_diagonal(op(sp, {0, 1, 0, 0, 0, 0, 0, 0, 0})).status ==
          IdempotentCheck::Status::not_diagonal);
}

TEST_CASE("projector lattice") {
    SpacePtr sp = orthonormal(4);
    Projector pj(sp, {0, 1}), pl(sp, {1, 3});
    CHECK(pj.to_operator().compose(pl.to_operator()) ==
          Projector(sp, {1}).to_operator());
    CHECK(pj.to_operator() + pj.complement().to_operator() == Operator::identity(sp));
    CHECK(Projector(sp, {}).to_operator().is_zero());
}

TEST_CASE("projector algebra elements validate their partition") {
    SpacePtr sp = orthonormal(3);
    CHECK_THROWS_AS(BElement(sp, {{0, 1}, {1}}, sc(1), {sc(1), sc(2)}), InputError);
    CHECK_THROWS_AS(BElement(sp, {{0}, {}}, sc(1), {sc(1), sc(2)}), InputError);
    CHECK_THROWS_AS(BElement(sp, {{0, 1}, {2}}, sc(1), {sc(1), sc(2)}), InputError);
    CHECK_THROWS_AS(BElement(sp, {{0}}, sc(1), {sc(1), sc(2)}), InputError);
    // a proper partition with a complement is fine
    BElement u(sp, {{0}, {1}}, sc(1), {sc(2), sc(3)});
    CHECK(u.blocks() == 2);
}

TEST_CASE("closed norm forms") {
    SpacePtr sp = orthonormal(3);
    SUBCASE("cancellation in alpha0 + alpha_nu") {
        BElement u(sp, {{0, 1}}, sc(5), {sc(1)});
        CHECK(b_norm(u) == LogNorm::one());  // max(|5|, |6|) = 1 = max(|5|, |1|)
        CHECK(op_norm(u.to_operator()) == LogNorm::one());
    }
    SUBCASE("no blocks") {
        BElement u(sp, {}, sc(1), {});
        CHECK(b_norm(u) == LogNorm::one());
    }
    SUBCASE("plain projector has norm one") {
        BElement u(sp, {{0, 1}}, zero(), {sc(1)});
        CHECK(b_norm(u) == LogNorm::one());
        CHECK(op_norm(u.to_operator()) == LogNorm::one());
    }
    SUBCASE("matches the operator norm on random elements") {
        Rng rng(31);
        for (int t = 0; t < 500; ++t) {
            SpacePtr rsp = sampling::random_space(rng, kP, kPrec, 2, 6);
            BElement u = sampling::random_b_element(rng, rsp);
            CHECK(b_norm(u) == op_norm(u.to_operator()));
        }
    }
}

TEST_CASE("characters of the projector algebra") {
    SpacePtr sp = orthonormal(3);
    SUBCASE("unital") {
        BElement id(sp, {{0}, {1}}, sc(1), {zero(), zero()});
        for (const auto& [chi, value] : characters(id)) CHECK(value == sc(1));
    }
    SUBCASE("formula values") {
        BElement u(sp, {{0, 1}}, sc(5), {sc(1)});
        auto chars = characters(u);
        REQUIRE(chars.size() == 2);
        CHECK(chars[0].first.is_chi0());
        CHECK(chars[0].second == sc(5));
        CHECK(chars[1].second == sc(6));
    }
    SUBCASE("projector evaluations") {
        BElement p1(sp, {{0}, {1}}, zero(), {sc(1), zero()});
        CHECK(Character{Character::kChi0}.eval(p1).is_zero());
        CHECK(Character{0}.eval(p1) == sc(1));
        CHECK(Character{1}.eval(p1).is_zero());
    }
}

TEST_CASE("gelfand transform") {
    SpacePtr sp = orthonormal(3);
    SUBCASE("identity maps to the constant table") {
        BElement id(sp, {{0}, {1}}, sc(1), {zero(), zero()});
        GelfandTable t = gelfand(id);
        for (const auto& v : t.values) CHECK(v == sc(1));
        CHECK(gelfand_inverse(sp, t) == id);
    }
    SUBCASE("table and sup norm") {
        BElement u(sp, {{0, 1}}, sc(5), {sc(1)});
        GelfandTable t = gelfand(u);
        REQUIRE(t.values.size() == 2);
        CHECK(t.values[0] == sc(5));
        CHECK(t.values[1] == sc(6));
        CHECK(t.sup_norm() == LogNorm::one());
        CHECK(t.sup_norm() == b_norm(u));
    }
    SUBCASE("round trip and ring homomorphism on random elements") {
        Rng rng(37);
        for (int t = 0; t < 500; ++t) {
            SpacePtr rsp = sampling::random_space(rng, kP, kPrec, 2, 6);
            BElement u = sampling::random_b_element(rng, rsp);
            CHECK(gelfand_inverse(rsp, gelfand(u)) == u);
            CHECK(gelfand(u).sup_norm() == b_norm(u));

            std::vector<PadicScalar> betas;
            for (std::size_t nu = 0; nu < u.blocks(); ++nu)
                betas.push_back(sampling::random_scalar(rng, kP, kPrec));
            BElement v(rsp, u.partition(), sampling::random_scalar(rng, kP, kPrec),
                       betas);
            GelfandTable gu = gelfand(u), gv = gelfand(v), guv = gelfand(u.mul(v));
            for (std::size_t k = 0; k < gu.values.size(); ++k)
                CHECK(guv.values[k] == gu.values[k] * gv.values[k]);
        }
    }
    SUBCASE("partition mismatch is an input error") {
        GelfandTable t;
        t.partition = {{0}};
        t.values = {sc(1)};  // needs two values for one block
        CHECK_THROWS_AS(gelfand_inverse(sp, t), InputError);
    }
}

TEST_CASE("diagonal spectrum at finite scale") {
    SpacePtr sp = orthonormal(3);
    auto chars = d_spectrum_finite(sp);
    CHECK(chars.size() == 3);
    Operator d = diag(sp, {4, 9, 14});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(chars[i].eval(d) == d.entry(i, i));
    Operator pj = Projector(sp, {0, 2}).to_operator();
    CHECK(chars[0].eval(pj) == sc(1));
    CHECK(chars[1].eval(pj).is_zero());
    CHECK(chars[2].eval(pj) == sc(1));
    CHECK_THROWS_AS(chars[0].eval(op(sp, {0, 1, 0, 0, 0, 0, 0, 0, 0})), InputError);
}
