#pragma once

#include <stdexcept>

#include "margulis/holonomy.hpp"
#include "margulis/lorentz.hpp"

// Affine deformations of a holonomy representation.  A cocycle assigns a
// translational part u(g) in R^{2,1} to every group element subject to
//
//   u(gh) = u(g) + g.u(h),
//
// where g acts on R^{2,1} through the adjoint representation; it is
// determined by its values on the generators.  Coboundaries u(g) = v - g.v
// are the cocycles of deformations conjugate to the undeformed action.

namespace margulis {

// Action of an isometry on R^{2,1}: conjugation in the sl(2,R) picture.
inline Vec21 linear_action(const IsometryLift& g, const Vec21& v) {
    return sl2_to_vec(adjoint_action(g, vec_to_sl2(v)));
}

struct Cocycle {
    Vec21 u_a;
    Vec21 u_b;

    friend Cocycle operator+(const Cocycle& u, const Cocycle& v) {
        return {u.u_a + v.u_a, u.u_b + v.u_b};
    }
    friend Cocycle operator-(const Cocycle& u) { return {-u.u_a, -u.u_b}; }
    friend Cocycle operator*(double t, const Cocycle& u) {
        return {t * u.u_a, t * u.u_b};
    }
};

// x -> g.x + u with the linear part acting through linear_action.
struct AffineIsometry {
    IsometryLift linear;
    Vec21 translation;

    static AffineIsometry identity() { return {IsometryLift::identity(), Vec21{}}; }

    Vec21 apply(const Vec21& x) const { return linear_action(linear, x) + translation; }

    // this then-after rhs in map order: (g,u) o (h,v) = (gh, u + g.v).
    AffineIsometry compose(const AffineIsometry& rhs) const {
        return {linear * rhs.linear, translation + linear_action(linear, rhs.translation)};
    }
};

// u at a single letter, using u(x^-1) = -x^-1 . u(x) for inverse letters.
inline Vec21 generator_value(const HolonomyRep& rep, const Cocycle& u, char letter) {
    switch (letter) {
        case 'a': return u.u_a;
        case 'b': return u.u_b;
        case 'A': return -linear_action(rep.gen_a.inverse(), u.u_a);
        case 'B': return -linear_action(rep.gen_b.inverse(), u.u_b);
    }
    throw std::invalid_argument(std::string("generator_value: invalid letter '") +
                                letter + "'");
}

// u(w) accumulated left to right along the word.
inline Vec21 extend_cocycle(const HolonomyRep& rep, const Cocycle& u, const Word& w) {
    Vec21 acc{};
    IsometryLift prefix = IsometryLift::identity();
    for (char c : w.letters()) {
        acc = acc + linear_action(prefix, generator_value(rep, u, c));
        switch (c) {
            case 'a': prefix = prefix * rep.gen_a; break;
            case 'A': prefix = prefix * rep.gen_a.inverse(); break;
            case 'b': prefix = prefix * rep.gen_b; break;
            case 'B': prefix = prefix * rep.gen_b.inverse(); break;
        }
    }
    return acc;
}

// The affine isometry of w under the deformation: w -> (evaluate(w), u(w))
// is a homomorphism into the affine group.
inline AffineIsometry affine_action(const HolonomyRep& rep, const Cocycle& u,
                                    const Word& w) {
    return {evaluate(rep, w), extend_cocycle(rep, u, w)};
}

// Cocycle of the deformation conjugate to the linear action by the
// translation v: u(g) = v - g.v on each generator.
inline Cocycle coboundary(const HolonomyRep& rep, const Vec21& v) {
    return {v - linear_action(rep.gen_a, v), v - linear_action(rep.gen_b, v)};
}

}  // namespace margulis
