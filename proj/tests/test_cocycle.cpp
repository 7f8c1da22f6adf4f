#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "margulis/margulis.hpp"
#include "oracles.hpp"

using namespace margulis;
using Catch::Matchers::WithinAbs;

namespace {

void require_close(const Vec21& x, const Vec21& y, double tol) {
    REQUIRE_THAT(x.x1, WithinAbs(y.x1, tol));
    REQUIRE_THAT(x.x2, WithinAbs(y.x2, tol));
    REQUIRE_THAT(x.x3, WithinAbs(y.x3, tol));
}

HolonomyRep reference_rep() { return fricke_construct(-3.0, -3.0, -3.0); }

// Rounding in the adjoint action grows with the square of the matrix
// entries, so identities over long words are checked against that scale.
double action_scale(const IsometryLift& g) {
    const double m = std::max(std::max(std::abs(g.m11), std::abs(g.m12)),
                              std::max(std::abs(g.m21), std::abs(g.m22)));
    return 1.0 + m * m;
}

}  // namespace

TEST_CASE("linear action examples") {
    const IsometryLift g{std::exp(1.0), 0.0, 0.0, std::exp(-1.0)};
    // The axis direction of the diagonal model is fixed.
    require_close(linear_action(g, Vec21{1.0, 0.0, 0.0}), Vec21{1.0, 0.0, 0.0}, 1e-15);
    // The orthogonal spacelike direction boosts into the cone.
    require_close(linear_action(g, Vec21{0.0, 1.0, 0.0}),
                  Vec21{0.0, std::cosh(2.0), std::sinh(2.0)}, 1e-12);
    require_close(linear_action(g, Vec21{0.0, 0.0, 1.0}),
                  Vec21{0.0, std::sinh(2.0), std::cosh(2.0)}, 1e-12);
}

TEST_CASE("linear action preserves the Lorentzian form") {
    Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        const IsometryLift g = oracles::random_lift(rng);
        const Vec21 x = oracles::random_vec(rng, -2.0, 2.0);
        const Vec21 y = oracles::random_vec(rng, -2.0, 2.0);
        REQUIRE_THAT(minkowski_dot(linear_action(g, x), linear_action(g, y)),
                     WithinAbs(minkowski_dot(x, y), 1e-10));
    }
}

TEST_CASE("generator values and inverse letters") {
    const HolonomyRep rep = reference_rep();
    const Cocycle u{Vec21{0.3, -0.7, 0.2}, Vec21{1.1, 0.4, -0.9}};
    require_close(generator_value(rep, u, 'a'), u.u_a, 0.0);
    require_close(generator_value(rep, u, 'b'), u.u_b, 0.0);
    // u(g^-1) = -g^-1 u(g): the cocycle identity forced at inverse letters.
    require_close(generator_value(rep, u, 'A'),
                  -linear_action(rep.gen_a.inverse(), u.u_a), 0.0);
    require_close(generator_value(rep, u, 'B'),
                  -linear_action(rep.gen_b.inverse(), u.u_b), 0.0);
    REQUIRE_THROWS_AS(generator_value(rep, u, 'x'), std::invalid_argument);
}

TEST_CASE("cocycle extension examples") {
    const HolonomyRep rep = reference_rep();
    const Cocycle u{Vec21{0.3, -0.7, 0.2}, Vec21{1.1, 0.4, -0.9}};
    require_close(extend_cocycle(rep, u, Word()), Vec21{}, 0.0);
    // One letter costs one round trip through sl(2,R) coordinates, so the
    // match is to rounding, not bitwise.
    require_close(extend_cocycle(rep, u, Word::reduce("a")), u.u_a, 1e-15);
    // u(ab) = u(a) + a . u(b).
    require_close(extend_cocycle(rep, u, Word::reduce("ab")),
                  u.u_a + linear_action(rep.gen_a, u.u_b), 1e-13);
    // Cancellation: u(a a^-1) = 0 must come out numerically, not structurally,
    // when evaluated on the unreduced concatenation of values.
    const Vec21 cancel =
        generator_value(rep, u, 'a') +
        linear_action(rep.gen_a, generator_value(rep, u, 'A'));
    require_close(cancel, Vec21{}, 1e-13);
}

TEST_CASE("cocycle identity on random word pairs") {
    const HolonomyRep rep = reference_rep();
    Rng rng(62);
    const Cocycle u{oracles::random_vec(rng, -1.0, 1.0), oracles::random_vec(rng, -1.0, 1.0)};
    for (int i = 0; i < 200; ++i) {
        const Word x = oracles::random_word(rng, 1 + static_cast<int>(rng.bits() % 7));
        const Word y = oracles::random_word(rng, 1 + static_cast<int>(rng.bits() % 7));
        const Vec21 lhs = extend_cocycle(rep, u, x * y);
        const Vec21 rhs = extend_cocycle(rep, u, x) +
                          linear_action(evaluate(rep, x), extend_cocycle(rep, u, y));
        const double tol =
            1e-13 * action_scale(evaluate(rep, x)) * action_scale(evaluate(rep, y));
        require_close(lhs, rhs, tol);
    }
}

TEST_CASE("affine action composes like the group") {
    const HolonomyRep rep = reference_rep();
    Rng rng(63);
    const Cocycle u{oracles::random_vec(rng, -1.0, 1.0), oracles::random_vec(rng, -1.0, 1.0)};
    for (int i = 0; i < 100; ++i) {
        const Word x = oracles::random_word(rng, 1 + static_cast<int>(rng.bits() % 6));
        const Word y = oracles::random_word(rng, 1 + static_cast<int>(rng.bits() % 6));
        const AffineIsometry composed = affine_action(rep, u, x).compose(affine_action(rep, u, y));
        const AffineIsometry direct = affine_action(rep, u, x * y);
        const Vec21 p = oracles::random_vec(rng, -2.0, 2.0);
        const Vec21 via_composed = composed.apply(p);
        const Vec21 via_direct = direct.apply(p);
        const double tol =
            1e-13 * action_scale(evaluate(rep, x)) * action_scale(evaluate(rep, y));
        require_close(via_composed, via_direct, tol);
    }
}

TEST_CASE("affine action basics") {
    const HolonomyRep rep = reference_rep();
    const Cocycle u{Vec21{0.3, -0.7, 0.2}, Vec21{1.1, 0.4, -0.9}};
    const AffineIsometry id = AffineIsometry::identity();
    require_close(id.apply(Vec21{1.0, 2.0, 3.0}), Vec21{1.0, 2.0, 3.0}, 0.0);
    // Translation part at the origin.
    const AffineIsometry rho = affine_action(rep, u, Word::reduce("ab"));
    require_close(rho.apply(Vec21{}), extend_cocycle(rep, u, Word::reduce("ab")), 0.0);
}

TEST_CASE("coboundaries") {
    const HolonomyRep rep = reference_rep();
    Rng rng(64);
    for (int i = 0; i < 50; ++i) {
        const Vec21 v = oracles::random_vec(rng, -2.0, 2.0);
        const Cocycle del = coboundary(rep, v);
        require_close(del.u_a, v - linear_action(rep.gen_a, v), 0.0);
        // Extension of a coboundary stays a coboundary: u(w) = v - w.v.
        const Word w = oracles::random_word(rng, 1 + static_cast<int>(rng.bits() % 8));
        const Vec21 expected = v - linear_action(evaluate(rep, w), v);
        require_close(extend_cocycle(rep, del, w), expected,
                      1e-10 * (1.0 + expected.euclidean_norm()));
        // The affine action of a coboundary is conjugate to the linear action
        // by the translation through v.
        const Vec21 p = oracles::random_vec(rng, -2.0, 2.0);
        const Vec21 lhs = affine_action(rep, del, w).apply(p);
        const Vec21 rhs = linear_action(evaluate(rep, w), p - v) + v;
        require_close(lhs, rhs, 1e-10 * (1.0 + rhs.euclidean_norm()));
    }
}

TEST_CASE("cocycle arithmetic") {
    const Cocycle u{Vec21{1.0, 2.0, 3.0}, Vec21{-1.0, 0.5, 0.0}};
    const Cocycle v{Vec21{0.5, -2.0, 1.0}, Vec21{2.0, 0.5, -3.0}};
    const Cocycle s = u + v;
    REQUIRE(s.u_a.x1 == 1.5);
    REQUIRE(s.u_b.x3 == -3.0);
    const Cocycle n = -u;
    REQUIRE(n.u_a.x2 == -2.0);
    const Cocycle t = 2.0 * u;
    REQUIRE(t.u_b.x2 == 1.0);

    // Linearity of the extension.
    const HolonomyRep rep = reference_rep();
    const Word w = Word::reduce("abAB");
    const Vec21 lhs = extend_cocycle(rep, s, w);
    const Vec21 rhs = extend_cocycle(rep, u, w) + extend_cocycle(rep, v, w);
    require_close(lhs, rhs, 1e-11 * (1.0 + rhs.euclidean_norm()));
}
