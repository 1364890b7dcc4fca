#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conelim/errors.hpp"
#include "conelim/pair.hpp"
#include "conelim/testkit.hpp"
#include "support.hpp"

using namespace conelim;
using fixtures::C;
using fixtures::X;
using fixtures::Y;
using fixtures::Z;

TEST_CASE("validation accepts the zero field and the fixtures") {
    HitchinPair zero = HitchinPair::create(BundleModel({2, 0}), 1,
                                           {{Z(), Z()}, {Z(), Z()}});
    CHECK(validate(zero).higgs().is_zero());
    CHECK_NOTHROW(validate(fixtures::fixture_a()));
}

TEST_CASE("negative-degree slot must stay empty") {
    CHECK_THROWS_AS(HitchinPair::create(BundleModel({1, 0}), 0, {{Z(), Z()}, {X(), Z()}},
                                        /*min_l=*/0),
                    HolomorphyViolation);
}

TEST_CASE("wrong entry degree is a holomorphy violation") {
    // slot (1,2) needs degree 2 here; a linear entry violates the law
    CHECK_THROWS_AS(HitchinPair::create(BundleModel({1, 0}), 1,
                                        {{Z(), X()}, {Z(), Z()}}),
                    HolomorphyViolation);
}

TEST_CASE("line degree below the model bound is rejected") {
    CHECK_THROWS_AS(HitchinPair::create(BundleModel({0, 0}), 0, {{Z(), Z()}, {Z(), Z()}}),
                    HolomorphyViolation);
}

TEST_CASE("characteristic coefficients of the zero field vanish") {
    HitchinPair zero = HitchinPair::create(BundleModel({1, 0, -1}), 2,
                                           {{Z(), Z(), Z()}, {Z(), Z(), Z()}, {Z(), Z(), Z()}});
    CHECK(hitchin_map(zero).all_zero());
}

TEST_CASE("triangular fields have vanishing characteristic coefficients") {
    CHECK(hitchin_map(fixtures::fixture_a()).all_zero());
    CHECK(hitchin_map(fixtures::fixture_a_prime()).all_zero());
}

TEST_CASE("rank-2 trace and determinant") {
    HitchinPair p = HitchinPair::create(BundleModel({0, 0}), 1, {{Z(), X()}, {Y(), Z()}});
    HitchinImage img = hitchin_map(p);
    CHECK(img.coefficients[0].is_zero());
    CHECK(img.coefficients[1] == -mul(X(), Y()));
}

TEST_CASE("coefficient degrees follow the twist") {
    testkit::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        testkit::GenParams params;
        params.seed = trial;
        params.rank = rng.uniform(2, 4);
        params.shape = testkit::Shape::Any;
        HitchinPair p = testkit::random_pair(params);
        HitchinImage img = hitchin_map(p);
        for (int k = 1; k <= p.rank(); ++k) {
            const BinaryForm& f = img.coefficients[k - 1];
            if (!f.is_zero()) CHECK(f.degree() == k * p.l_degree());
        }
    }
}

TEST_CASE("nilpotency orders of the fixtures") {
    HitchinPair zero = HitchinPair::create(BundleModel({1, 0, -1}), 2,
                                           {{Z(), Z(), Z()}, {Z(), Z(), Z()}, {Z(), Z(), Z()}});
    CHECK(nilpotency_order(zero) == 1);
    CHECK(nilpotency_order(fixtures::fixture_a()) == 3);
    CHECK(nilpotency_order(fixtures::fixture_a_prime()) == 3);
    CHECK(nilpotency_order(fixtures::fixture_b()) == 2);
    CHECK(nilpotency_order(fixtures::fixture_c()) == 2);
}

TEST_CASE("non-nilpotent fields are rejected") {
    HitchinPair p = HitchinPair::create(BundleModel({0, 0}), 1, {{Z(), X()}, {Y(), Z()}});
    CHECK_THROWS_AS(nilpotency_order(p), NotNilpotent);
}

TEST_CASE("nilpotency agrees with vanishing of the characteristic coefficients") {
    for (int seed = 0; seed < 100; ++seed) {
        testkit::GenParams params;
        params.seed = seed;
        params.rank = 2 + seed % 3;
        params.shape = testkit::Shape::Any;
        HitchinPair p = testkit::random_pair(params);
        bool char_zero = hitchin_map(p).all_zero();
        bool has_order = true;
        int order = 0;
        try {
            order = nilpotency_order(p);
        } catch (const NotNilpotent&) {
            has_order = false;
        }
        CHECK(char_zero == has_order);
        if (has_order) {
            CHECK(order >= 1);
            CHECK(order <= p.rank());
            bool penultimate_nonzero =
                order == 1 ? p.higgs().is_zero() : !higgs_power(p, order - 1).is_zero();
            CHECK(penultimate_nonzero);
        }
    }
}

TEST_CASE("slopes are exact rationals") {
    CHECK(slope(0, 3) == Rational(0));
    CHECK(slope(-1, 3) == Rational(-1, 3));
    CHECK(slope(-2, 2) == Rational(-1));
    CHECK_THROWS_AS(slope(1, 0), ZeroRank);
}

TEST_CASE("scaling the field") {
    HitchinPair b = fixtures::fixture_b();
    CHECK(scale(b, 1) == b);
    CHECK_THROWS_AS(scale(b, 0), ZeroScalar);
    HitchinPair doubled = scale(b, 2);
    CHECK(doubled.higgs().at(2, 0) == X().scaled(2));
    CHECK(doubled.higgs().at(2, 1) == Y().scaled(2));
}

TEST_CASE("characteristic coefficients scale with the matching power") {
    testkit::Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        testkit::GenParams params;
        params.seed = 1000 + trial;
        params.rank = rng.uniform(2, 4);
        params.shape = testkit::Shape::Any;
        HitchinPair p = testkit::random_pair(params);
        Rational lambda(rng.uniform(1, 9), rng.uniform(1, 5));
        if (rng.uniform(0, 1)) lambda = -lambda;
        HitchinImage base = hitchin_map(p);
        HitchinImage scaled_img = hitchin_map(scale(p, lambda));
        Rational pow = 1;
        for (int k = 1; k <= p.rank(); ++k) {
            pow *= lambda;
            CHECK(scaled_img.coefficients[k - 1] == base.coefficients[k - 1].scaled(pow));
        }
    }
}
