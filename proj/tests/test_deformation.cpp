#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "margulis/margulis.hpp"
#include "oracles.hpp"

using namespace margulis;
using Catch::Matchers::WithinAbs;

namespace {

HolonomyRep diag_rep() {
    return HolonomyRep{IsometryLift{std::exp(1.0), 0.0, 0.0, std::exp(-1.0)},
                       IsometryLift{3.0, -1.0, 1.0, 0.0}};
}

HolonomyRep shear_rep() {
    return HolonomyRep{IsometryLift{1.0, 1.0, 0.0, 1.0},
                       IsometryLift{3.0, -1.0, 1.0, 0.0}};
}

HolonomyRep reference_rep() { return fricke_construct(-3.0, -3.0, -3.0); }

}  // namespace

TEST_CASE("deformation path basics") {
    const HolonomyRep rep = reference_rep();
    const Cocycle u{Vec21{0.3, -0.2, 0.1}, Vec21{-0.5, 0.0, 0.4}};
    const Word w = Word::reduce("ab");
    const IsometryLift at0 = deformation_path_element(rep, u, w, 0.0);
    const IsometryLift direct = evaluate(rep, w);
    REQUIRE(at0.m11 == direct.m11);
    REQUIRE(at0.m12 == direct.m12);
    // Unit determinant along the path is enforced by the lift constructor.
    REQUIRE_NOTHROW(deformation_path_element(rep, u, w, 0.37));
}

TEST_CASE("deformation path of the diagonal model is explicit") {
    const HolonomyRep rep = diag_rep();
    const Cocycle u{Vec21{0.3, 0.0, 0.0}, Vec21{}};
    // exp(0.3 t E1) diag(e, 1/e) = diag(e^{1 + 0.3 t}, e^{-(1 + 0.3 t)}).
    for (double t : {-0.5, -0.1, 0.0, 0.2, 0.7}) {
        const IsometryLift g = deformation_path_element(rep, u, Word::reduce("a"), t);
        REQUIRE_THAT(g.m11, WithinAbs(std::exp(1.0 + 0.3 * t), 1e-12));
        REQUIRE_THAT(g.m22, WithinAbs(std::exp(-1.0 - 0.3 * t), 1e-13));
        REQUIRE_THAT(g.m12, WithinAbs(0.0, 1e-15));
        REQUIRE_THAT(g.m21, WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("length derivative on the diagonal model") {
    const HolonomyRep rep = diag_rep();
    const Cocycle u{Vec21{0.3, 0.0, 0.0}, Vec21{}};
    const DerivativeCheck c = length_derivative_check(rep, u, Word::reduce("a"), 1e-5);
    // length_t = 2 (1 + 0.3 t): derivative exactly 0.6 = kappa * alpha.
    REQUIRE_THAT(c.fd, WithinAbs(0.6, 1e-6));
    REQUIRE_THAT(c.predicted, WithinAbs(0.6, 1e-12));
    REQUIRE_THAT(c.ratio, WithinAbs(1.0, 1e-6));
    REQUIRE(kLengthDerivativeKappa == 2.0);
}

TEST_CASE("deformations along the null legs do not move the length") {
    const HolonomyRep rep = diag_rep();
    // u(a) in the span of the null eigendirections of Ad(a): alpha vanishes
    // and the first-order length response vanishes with it.
    const Cocycle u{Vec21{0.0, 0.8, -0.3}, Vec21{}};
    const DerivativeCheck c = length_derivative_check(rep, u, Word::reduce("a"), 1e-5);
    REQUIRE_THAT(c.predicted, WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(c.fd, WithinAbs(0.0, 1e-6));
    REQUIRE(std::isnan(c.ratio));
}

TEST_CASE("length derivative across random words") {
    const HolonomyRep rep = reference_rep();
    Rng rng(81);
    const Cocycle u{oracles::random_vec(rng, -1.0, 1.0), oracles::random_vec(rng, -1.0, 1.0)};
    for (int i = 0; i < 60; ++i) {
        const Word w = oracles::random_word(rng, 1 + static_cast<int>(rng.bits() % 6));
        const DerivativeCheck c = length_derivative_check(rep, u, w, 1e-5);
        REQUIRE_THAT(c.fd, WithinAbs(c.predicted,
                                     1e-4 * std::max(1.0, std::abs(c.fd))));
    }
}

TEST_CASE("length derivative for a coboundary is flat") {
    const HolonomyRep rep = reference_rep();
    const Cocycle u = coboundary(rep, Vec21{0.6, -0.2, 0.3});
    for (const char* s : {"a", "b", "ab", "aB"}) {
        const DerivativeCheck c = length_derivative_check(rep, u, Word::reduce(s), 1e-5);
        REQUIRE_THAT(c.predicted, WithinAbs(0.0, 1e-9));
        REQUIRE_THAT(c.fd, WithinAbs(0.0, 1e-5));
    }
}

TEST_CASE("length derivative validates inputs") {
    const HolonomyRep rep = reference_rep();
    const Cocycle u{Vec21{1.0, 0.0, 0.0}, Vec21{}};
    REQUIRE_THROWS_AS(length_derivative_check(rep, u, Word::reduce("a"), 0.0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(length_derivative_check(rep, u, Word::reduce("a"), -1e-5),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(length_derivative_check(rep, u, Word(), 1e-5), std::domain_error);
    // Parabolic word: no length to differentiate.
    const HolonomyRep shear = shear_rep();
    REQUIRE_THROWS_AS(length_derivative_check(shear, u, Word::reduce("a"), 1e-5),
                      std::domain_error);
}

TEST_CASE("parabolic trace derivative matches alpha_tilde") {
    const HolonomyRep rep = shear_rep();
    // Cocycle value [[0,0],[1,0]] at a: alpha_tilde = r*c/2 = 1/2.
    const Cocycle u{Vec21{0.0, 0.5, -0.5}, Vec21{}};
    const DerivativeCheck c =
        parabolic_trace_derivative_check(rep, u, Word::reduce("a"), 1e-5);
    REQUIRE_THAT(c.predicted, WithinAbs(0.5, 1e-14));
    REQUIRE_THAT(c.fd, WithinAbs(0.5, 1e-5));
    REQUIRE_THAT(c.ratio, WithinAbs(1.0, 1e-4));

    // Upper-triangular cocycle value: invariant zero, trace response flat.
    const Cocycle flat{Vec21{0.0, 0.5, 0.5}, Vec21{}};
    const DerivativeCheck cf =
        parabolic_trace_derivative_check(rep, flat, Word::reduce("a"), 1e-5);
    REQUIRE_THAT(cf.predicted, WithinAbs(0.0, 1e-14));
    REQUIRE_THAT(cf.fd, WithinAbs(0.0, 1e-6));
}

TEST_CASE("parabolic trace derivative at a parabolic boundary word") {
    const HolonomyRep rep = fricke_construct(-3.0, -3.0, -2.0);
    Rng rng(82);
    const Cocycle u{oracles::random_vec(rng, -1.0, 1.0), oracles::random_vec(rng, -1.0, 1.0)};
    const Word d3 = boundary_words().d3;
    REQUIRE(classify(evaluate(rep, d3)) == IsometryClass::Parabolic);
    const DerivativeCheck c = parabolic_trace_derivative_check(rep, u, d3, 1e-5);
    REQUIRE_THAT(c.fd, WithinAbs(c.predicted, 1e-4 * std::max(1.0, std::abs(c.predicted))));

    // Coboundaries have flat trace response here too.
    const Cocycle del = coboundary(rep, Vec21{0.4, 0.1, -0.7});
    const DerivativeCheck cd = parabolic_trace_derivative_check(rep, del, d3, 1e-5);
    REQUIRE_THAT(cd.predicted, WithinAbs(0.0, 1e-10));
    REQUIRE_THAT(cd.fd, WithinAbs(0.0, 1e-5));
}

TEST_CASE("parabolic trace derivative validates inputs") {
    const HolonomyRep rep = reference_rep();
    const Cocycle u{Vec21{1.0, 0.0, 0.0}, Vec21{}};
    REQUIRE_THROWS_AS(parabolic_trace_derivative_check(rep, u, Word::reduce("a"), 0.0),
                      std::invalid_argument);
    // Hyperbolic word rejected.
    REQUIRE_THROWS_AS(parabolic_trace_derivative_check(rep, u, Word::reduce("a"), 1e-5),
                      std::domain_error);
}

TEST_CASE("trace derivative sign flips with the lift sign of the shear") {
    // Negative-trace parabolic generator: the sigma factor keeps the
    // derivative aligned with alpha_tilde.
    const HolonomyRep rep{IsometryLift{-1.0, -1.0, 0.0, -1.0},
                          IsometryLift{3.0, -1.0, 1.0, 0.0}};
    const Cocycle u{Vec21{0.0, 0.5, -0.5}, Vec21{}};
    const DerivativeCheck c =
        parabolic_trace_derivative_check(rep, u, Word::reduce("a"), 1e-5);
    REQUIRE_THAT(c.predicted, WithinAbs(0.5, 1e-14));
    REQUIRE_THAT(c.fd, WithinAbs(0.5, 1e-5));
}
