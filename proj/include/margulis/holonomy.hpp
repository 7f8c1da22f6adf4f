#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "margulis/isometry.hpp"
#include "margulis/words.hpp"

// Holonomy representations of the three-holed sphere: the fundamental group
// is free on a, b, and the boundary classes are d1 = a, d2 = b, d3 = (ab)^-1,
// so that d1 d2 d3 = 1.

namespace margulis {

struct BoundaryWords {
    Word d1;
    Word d2;
    Word d3;
};

inline BoundaryWords boundary_words() {
    return {Word::reduce("a"), Word::reduce("b"), Word::reduce("BA")};
}

// Generator images; boundary words must be non-elliptic (hyperbolic funnels
// or parabolic cusps) for the representation to qualify.
struct HolonomyRep {
    IsometryLift gen_a;
    IsometryLift gen_b;

    HolonomyRep(const IsometryLift& a, const IsometryLift& b) : gen_a(a), gen_b(b) {
        check_boundary(gen_a, "d1 = a");
        check_boundary(gen_b, "d2 = b");
        check_boundary((gen_a * gen_b).inverse(), "d3 = (ab)^-1");
    }

  private:
    static void check_boundary(const IsometryLift& g, const char* name) {
        const IsometryClass cls = classify(g);
        if (cls == IsometryClass::Elliptic || cls == IsometryClass::Identity) {
            throw std::domain_error(std::string("HolonomyRep: boundary word ") + name +
                                    " is " + to_string(cls) +
                                    "; boundary classes must be hyperbolic or parabolic");
        }
    }
};

inline IsometryLift evaluate(const HolonomyRep& rep, const Word& w) {
    const IsometryLift inv_a = rep.gen_a.inverse();
    const IsometryLift inv_b = rep.gen_b.inverse();
    IsometryLift g = IsometryLift::identity();
    for (char c : w.letters()) {
        switch (c) {
            case 'a': g = g * rep.gen_a; break;
            case 'A': g = g * inv_a; break;
            case 'b': g = g * rep.gen_b; break;
            case 'B': g = g * inv_b; break;
        }
    }
    return g;
}

// Generators with prescribed boundary traces Tr(a) = x, Tr(b) = y,
// Tr(ab) = z in Fricke normal form:
//
//   a = [[x, -1], [1, 0]],   b = [[0, zeta], [-1/zeta, y]],
//
// where zeta + 1/zeta = z.  The branch zeta = (z + sign(z) sqrt(z^2-4))/2
// keeps zeta real with |zeta| >= 1.
inline HolonomyRep fricke_construct(double x, double y, double z) {
    if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z))) {
        throw std::invalid_argument("fricke_construct: traces must be finite");
    }
    if (std::abs(x) < 2.0 || std::abs(y) < 2.0 || std::abs(z) < 2.0) {
        throw std::domain_error(
            "fricke_construct: all boundary traces need absolute value >= 2 "
            "(elliptic boundary rejected)");
    }
    const double sz = z > 0.0 ? 1.0 : -1.0;
    const double zeta =
        std::abs(z) == 2.0 ? 0.5 * z : 0.5 * (z + sz * std::sqrt(z * z - 4.0));
    if (zeta == 0.0) {
        throw std::domain_error("fricke_construct: degenerate zeta = 0");
    }
    const IsometryLift gen_a{x, -1.0, 1.0, 0.0};
    const IsometryLift gen_b{0.0, zeta, -1.0 / zeta, y};
    return HolonomyRep{gen_a, gen_b};
}

}  // namespace margulis
