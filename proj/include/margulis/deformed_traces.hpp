#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "margulis/isometry.hpp"
#include "margulis/rng.hpp"

// Closed-form traces of deformed model elements.  Conjugation invariance
// reduces every computation to the models
//
//   g = diag(e^s, e^-s)   (hyperbolic, s > 0),
//   p = [[1, r], [0, 1]]  (parabolic, r > 0),
//
// deformed by the left action pi_V(g) = exp(V) g or the right action
// pi'_V(g) = g exp(-V), where V = [[a, b], [c, -a]] is written in the model
// frame: a scales the neutral direction, and for the parabolic model the
// lower-left entry c is the direction that pairs with the shear r.  Both
// closed forms share the analytic continuation cosh_sinhc across
// q = a^2 + bc = 0.

namespace margulis {

struct DeformParams {
    double s = 0.0;  // hyperbolic translation parameter (> 0 when used)
    double r = 0.0;  // parabolic shear (> 0 when used)
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

inline DeformParams hyperbolic_params(double s, double a, double b, double c) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("hyperbolic_params: s must be positive");
    }
    return {s, 0.0, a, b, c};
}

inline DeformParams parabolic_params(double r, double a, double b, double c) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("parabolic_params: r must be positive");
    }
    return {0.0, r, a, b, c};
}

inline IsometryLift hyperbolic_model(double s) {
    return {std::exp(s), 0.0, 0.0, std::exp(-s)};
}

inline IsometryLift parabolic_model(double r) { return {1.0, r, 0.0, 1.0}; }

inline Sl2Vector deformation_vector(const DeformParams& p) { return {p.a, p.b, p.c}; }

inline IsometryLift pi_left(const Sl2Vector& v, const IsometryLift& g) {
    return exp_sl2(v) * g;
}

inline IsometryLift pi_right(const Sl2Vector& v, const IsometryLift& g) {
    return g * exp_sl2(-v);
}

// Tr(pi_V(g)) = 2 cosh(s) C(q) + 2 a sinh(s) S(q) with q = a^2 + bc.
inline double trace_deformed_hyperbolic(const DeformParams& p) {
    if (!(p.s > 0.0)) {
        throw std::invalid_argument("trace_deformed_hyperbolic: s must be positive");
    }
    const double q = p.a * p.a + p.b * p.c;
    const auto [c, sc] = cosh_sinhc(q);
    return 2.0 * std::cosh(p.s) * c + 2.0 * p.a * std::sinh(p.s) * sc;
}

// Tr(pi_V(p)) = 2 C(q) + c r S(q) with q = a^2 + bc.
inline double trace_deformed_parabolic(const DeformParams& p) {
    if (!(p.r > 0.0)) {
        throw std::invalid_argument("trace_deformed_parabolic: r must be positive");
    }
    const double q = p.a * p.a + p.b * p.c;
    const auto [c, sc] = cosh_sinhc(q);
    return 2.0 * c + p.c * p.r * sc;
}

enum class DeformKind { Hyperbolic, Parabolic };
enum class DeformAction { Left, Right };

inline const char* to_string(DeformKind k) {
    return k == DeformKind::Hyperbolic ? "hyperbolic" : "parabolic";
}

inline const char* to_string(DeformAction a) {
    return a == DeformAction::Left ? "left" : "right";
}

struct LemmaSignReport {
    DeformKind kind;
    DeformAction action;
    int samples;
    int agreeing;              // samples whose finite-difference sign matches
    bool all_agree;
    double min_abs_derivative;  // smallest |response| observed at h = 1e-5
    bool first_order;           // |fd| stable between h = 1e-4 and h = 1e-5
};

// First-order sign of the deformation: for a positive-invariant direction
// (a > 0 hyperbolic, c > 0 parabolic) the left action increases the length
// (respectively trace) and the right action decreases it.  Each sample draws
// the shift from [0.2, 2] and frame coordinates from [-1, 1]^3 with the
// conditioning coordinate folded positive, then compares central differences
// at h = 1e-4 and h = 1e-5.
inline LemmaSignReport lemma_sign_check(DeformKind kind, DeformAction action,
                                        int samples, std::uint64_t seed = 0) {
    if (samples < 1) {
        throw std::invalid_argument("lemma_sign_check: samples must be >= 1");
    }
    Rng rng(seed);
    const int expected = action == DeformAction::Left ? 1 : -1;
    int agreeing = 0;
    bool first_order = true;
    double min_abs = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double shift = rng.uniform(0.2, 2.0);
        double a = rng.uniform(-1.0, 1.0);
        double b = rng.uniform(-1.0, 1.0);
        double c = rng.uniform(-1.0, 1.0);
        if (kind == DeformKind::Hyperbolic) {
            a = std::abs(a);
        } else {
            c = std::abs(c);
        }
        const Sl2Vector v{a, b, c};
        const IsometryLift g = kind == DeformKind::Hyperbolic
                                   ? hyperbolic_model(shift)
                                   : parabolic_model(shift);
        const auto value_at = [&](double t) {
            const IsometryLift d =
                action == DeformAction::Left ? pi_left(t * v, g) : pi_right(t * v, g);
            return kind == DeformKind::Hyperbolic ? geodesic_length(d) : d.trace();
        };
        const auto fd_at = [&](double h) {
            return (value_at(h) - value_at(-h)) / (2.0 * h);
        };
        const double fd4 = fd_at(1e-4);
        const double fd5 = fd_at(1e-5);
        const bool agrees = (fd4 > 0.0 ? 1 : -1) == expected &&
                            (fd5 > 0.0 ? 1 : -1) == expected;
        if (agrees) ++agreeing;
        min_abs = std::min(min_abs, std::abs(fd5));
        if (std::abs(fd5) > 1e-9) {
            const double ratio = fd4 / fd5;
            if (!(ratio > 0.5 && ratio < 2.0)) first_order = false;
        }
    }
    return {kind, action, samples, agreeing, agreeing == samples, min_abs, first_order};
}

}  // namespace margulis
