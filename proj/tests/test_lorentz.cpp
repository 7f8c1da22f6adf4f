#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "margulis/margulis.hpp"
#include "oracles.hpp"

using namespace margulis;
using Catch::Matchers::WithinAbs;

TEST_CASE("Killing form on the standard basis") {
    // Orthonormal basis of signature (2,1): <E1,E1> = <E2,E2> = 1, <E3,E3> = -1.
    REQUIRE(killing_form(kE1, kE1) == 1.0);
    REQUIRE(killing_form(kE2, kE2) == 1.0);
    REQUIRE(killing_form(kE3, kE3) == -1.0);
    REQUIRE(killing_form(kE1, kE2) == 0.0);
    REQUIRE(killing_form(kE1, kE3) == 0.0);
    REQUIRE(killing_form(kE2, kE3) == 0.0);
}

TEST_CASE("Killing form equals half the product trace") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Sl2Vector v = oracles::random_sl2(rng, -3.0, 3.0);
        const Sl2Vector w = oracles::random_sl2(rng, -3.0, 3.0);
        const double direct =
            0.5 * oracles::trace(oracles::mul(oracles::from_sl2(v), oracles::from_sl2(w)));
        REQUIRE_THAT(killing_form(v, w), WithinAbs(direct, 1e-12));
        REQUIRE_THAT(killing_form(v, w), WithinAbs(killing_form(w, v), 0.0));
    }
}

TEST_CASE("Killing form is bilinear") {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const Sl2Vector v = oracles::random_sl2(rng, -2.0, 2.0);
        const Sl2Vector w = oracles::random_sl2(rng, -2.0, 2.0);
        const Sl2Vector x = oracles::random_sl2(rng, -2.0, 2.0);
        const double t = rng.uniform(-2.0, 2.0);
        REQUIRE_THAT(killing_form(t * v + w, x),
                     WithinAbs(t * killing_form(v, x) + killing_form(w, x), 1e-12));
    }
}

TEST_CASE("matrix-vector identification is an isometry") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const Sl2Vector v = oracles::random_sl2(rng, -3.0, 3.0);
        const Sl2Vector w = oracles::random_sl2(rng, -3.0, 3.0);
        REQUIRE_THAT(minkowski_dot(sl2_to_vec(v), sl2_to_vec(w)),
                     WithinAbs(killing_form(v, w), 1e-12));
        const Vec21 x = oracles::random_vec(rng, -3.0, 3.0);
        const Vec21 y = oracles::random_vec(rng, -3.0, 3.0);
        REQUIRE_THAT(killing_form(vec_to_sl2(x), vec_to_sl2(y)),
                     WithinAbs(minkowski_dot(x, y), 1e-12));
    }
}

TEST_CASE("identification round-trips") {
    // Basis vectors map to the standard coordinate axes.
    const Vec21 e1 = sl2_to_vec(kE1);
    REQUIRE(e1.x1 == 1.0);
    REQUIRE(e1.x2 == 0.0);
    REQUIRE(e1.x3 == 0.0);
    const Vec21 e2 = sl2_to_vec(kE2);
    REQUIRE(e2.x2 == 1.0);
    const Vec21 e3 = sl2_to_vec(kE3);
    REQUIRE(e3.x3 == 1.0);

    Rng rng(14);
    for (int i = 0; i < 100; ++i) {
        const Sl2Vector v = oracles::random_sl2(rng, -3.0, 3.0);
        const Sl2Vector back = vec_to_sl2(sl2_to_vec(v));
        REQUIRE_THAT(back.a, WithinAbs(v.a, 1e-14));
        REQUIRE_THAT(back.b, WithinAbs(v.b, 1e-14));
        REQUIRE_THAT(back.c, WithinAbs(v.c, 1e-14));
        const Vec21 x = oracles::random_vec(rng, -3.0, 3.0);
        const Vec21 xback = sl2_to_vec(vec_to_sl2(x));
        REQUIRE_THAT(xback.x1, WithinAbs(x.x1, 1e-14));
        REQUIRE_THAT(xback.x2, WithinAbs(x.x2, 1e-14));
        REQUIRE_THAT(xback.x3, WithinAbs(x.x3, 1e-14));
    }
}

TEST_CASE("causal classification") {
    REQUIRE(causal_class(Vec21{1.0, 0.0, 0.0}) == CausalClass::Spacelike);
    REQUIRE(causal_class(Vec21{0.0, 0.0, 1.0}) == CausalClass::Timelike);
    REQUIRE(causal_class(Vec21{1.0, 0.0, 1.0}) == CausalClass::Null);
    REQUIRE(causal_class(Vec21{3.0, 4.0, 5.0}) == CausalClass::Null);
    REQUIRE(causal_class(Vec21{1e-5, 0.0, 1e-5}) == CausalClass::Null);
    REQUIRE(causal_class(Vec21{}) == CausalClass::Zero);
    // Slightly off the cone, outside the relative tolerance band.
    REQUIRE(causal_class(Vec21{1.0, 0.0, 1.0 + 2e-5}) == CausalClass::Timelike);
    REQUIRE(causal_class(Vec21{1.0 + 2e-5, 0.0, 1.0}) == CausalClass::Spacelike);
    REQUIRE(std::string(to_string(CausalClass::Null)) == "Null");
}

TEST_CASE("causal classification scales with the vector") {
    Rng rng(15);
    for (int i = 0; i < 100; ++i) {
        const Vec21 x = oracles::random_vec(rng, -3.0, 3.0);
        const CausalClass c = causal_class(x);
        REQUIRE(causal_class(7.5 * x) == c);
        REQUIRE(causal_class(-x) == c);
    }
}

TEST_CASE("vectors reject non-finite entries") {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    REQUIRE_THROWS_AS(Vec21(1.0, inf, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(Vec21(nan, 0.0, 0.0), std::invalid_argument);
    REQUIRE_NOTHROW(Vec21(1.0, -2.0, 3.0));
}
