#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "margulis/invariant.hpp"

// The deformation path rho_t(w) = exp(t u(w)) evaluate(w) induced by a
// cocycle, and central-finite-difference checks of the first-order
// identities: the geodesic length of a hyperbolic word changes at rate
// kappa * alpha, and (sigma/2) Tr of a parabolic word changes at rate
// alpha_tilde.

namespace margulis {

// d/dt length at t = 0 equals kappa * alpha.  With the pairing
// <V,W> = Tr(VW)/2 and the unit-spacelike neutral vector, the diagonal
// model g = diag(e^s, e^-s), u(g) = a X0 gives the exact path
// diag(e^{s+ta}, e^{-s-ta}), so length_t = 2(s + ta) while alpha = a,
// pinning kappa = 2.  Conventions that rescale the pairing or the neutral
// vector quote the same derivative as alpha or alpha/2; only the positive
// constant moves, never the sign.
inline constexpr double kLengthDerivativeKappa = 2.0;

inline IsometryLift deformation_path_element(const HolonomyRep& rep, const Cocycle& u,
                                             const Word& w, double t) {
    return exp_sl2(t * vec_to_sl2(extend_cocycle(rep, u, w))) * evaluate(rep, w);
}

struct DerivativeCheck {
    double fd;         // central finite difference
    double predicted;  // first-order prediction
    double ratio;      // fd / predicted (NaN when predicted == 0)
};

inline DerivativeCheck length_derivative_check(const HolonomyRep& rep, const Cocycle& u,
                                               const Word& w, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("length_derivative_check: h must be positive");
    }
    const IsometryLift g = evaluate(rep, w);
    if (classify(g) != IsometryClass::Hyperbolic) {
        throw std::domain_error("length_derivative_check: word '" + w.letters() +
                                "' is not hyperbolic");
    }
    const IsometryLift plus = deformation_path_element(rep, u, w, h);
    const IsometryLift minus = deformation_path_element(rep, u, w, -h);
    if (classify(plus) != IsometryClass::Hyperbolic ||
        classify(minus) != IsometryClass::Hyperbolic) {
        throw std::domain_error("length_derivative_check: step h = " +
                                std::to_string(h) +
                                " leaves the hyperbolic regime at word '" +
                                w.letters() + "'");
    }
    const double fd = (geodesic_length(plus) - geodesic_length(minus)) / (2.0 * h);
    const double predicted = kLengthDerivativeKappa * alpha(rep, u, w);
    const double ratio = predicted != 0.0 ? fd / predicted
                                          : std::numeric_limits<double>::quiet_NaN();
    return {fd, predicted, ratio};
}

// Central difference of (sigma/2) Tr(rho_t(w)) against alpha_tilde, with
// sigma the trace sign of the undeformed element.
inline DerivativeCheck parabolic_trace_derivative_check(const HolonomyRep& rep,
                                                        const Cocycle& u, const Word& w,
                                                        double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument(
            "parabolic_trace_derivative_check: h must be positive");
    }
    const IsometryLift g = evaluate(rep, w);
    if (classify(g) != IsometryClass::Parabolic) {
        throw std::domain_error("parabolic_trace_derivative_check: word '" +
                                w.letters() + "' is not parabolic");
    }
    const double sgn = static_cast<double>(trace_sign(g));
    const double tr_plus = deformation_path_element(rep, u, w, h).trace();
    const double tr_minus = deformation_path_element(rep, u, w, -h).trace();
    const double fd = sgn * (tr_plus - tr_minus) / (4.0 * h);
    const double predicted = alpha_tilde(rep, u, w);
    const double ratio = predicted != 0.0 ? fd / predicted
                                          : std::numeric_limits<double>::quiet_NaN();
    return {fd, predicted, ratio};
}

}  // namespace margulis
