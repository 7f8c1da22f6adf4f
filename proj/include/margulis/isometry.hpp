#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "margulis/lorentz.hpp"

// Linear isometries of R^{2,1} presented as 2x2 real matrices of determinant
// one acting on sl(2,R) by conjugation.  g and -g act identically, and every
// routine in this header returns the same answer for both lifts.

namespace margulis {

// |det - 1| tolerance per unit of squared entry size: the determinant of a
// float product of unit-determinant factors drifts like the square of the
// entry magnitude, so the acceptance window has to scale the same way.
inline constexpr double kDetTolerance = 1e-9;

// Width of the |Tr| = 2 band classified as parabolic (and of the band around
// +-identity classified as identity).
inline constexpr double kParabolicTolerance = 1e-9;

// |a^2 + bc| below which the exponential and the deformed-trace formulas
// switch from the closed form to the power series of cosh/sinhc.
inline constexpr double kExpSeriesThreshold = 1e-8;

struct IsometryLift {
    double m11, m12, m21, m22;

    IsometryLift(double m11_, double m12_, double m21_, double m22_)
        : m11(m11_), m12(m12_), m21(m21_), m22(m22_) {
        if (!(std::isfinite(m11) && std::isfinite(m12) && std::isfinite(m21) &&
              std::isfinite(m22))) {
            throw std::invalid_argument("IsometryLift: entries must be finite");
        }
        const double det = m11 * m22 - m12 * m21;
        const double size = max_abs();
        const double scale = std::max(1.0, size * size);
        if (std::abs(det - 1.0) > kDetTolerance * scale) {
            throw std::invalid_argument("IsometryLift: determinant is not 1 (got " +
                                        std::to_string(det) + ")");
        }
    }

    static IsometryLift identity() { return {1.0, 0.0, 0.0, 1.0}; }

    double trace() const { return m11 + m22; }

    double max_abs() const {
        return std::max(std::max(std::abs(m11), std::abs(m12)),
                        std::max(std::abs(m21), std::abs(m22)));
    }

    // Adjugate; exact inverse up to the det ~ 1 round-off.
    IsometryLift inverse() const { return {m22, -m12, -m21, m11}; }

    friend IsometryLift operator*(const IsometryLift& g, const IsometryLift& h) {
        return {g.m11 * h.m11 + g.m12 * h.m21, g.m11 * h.m12 + g.m12 * h.m22,
                g.m21 * h.m11 + g.m22 * h.m21, g.m21 * h.m12 + g.m22 * h.m22};
    }

    friend IsometryLift operator-(const IsometryLift& g) {
        return {-g.m11, -g.m12, -g.m21, -g.m22};
    }
};

enum class IsometryClass { Identity, Parabolic, Hyperbolic, Elliptic };

inline const char* to_string(IsometryClass c) {
    switch (c) {
        case IsometryClass::Identity: return "Identity";
        case IsometryClass::Parabolic: return "Parabolic";
        case IsometryClass::Hyperbolic: return "Hyperbolic";
        case IsometryClass::Elliptic: return "Elliptic";
    }
    return "?";
}

inline IsometryClass classify(const IsometryLift& g) {
    const double s = g.trace() >= 0.0 ? 1.0 : -1.0;
    const double dev = std::max(
        std::max(std::abs(g.m11 - s), std::abs(g.m22 - s)),
        std::max(std::abs(g.m12), std::abs(g.m21)));
    if (dev <= kParabolicTolerance) return IsometryClass::Identity;
    const double t = std::abs(g.trace());
    if (t > 2.0 + kParabolicTolerance) return IsometryClass::Hyperbolic;
    if (t >= 2.0 - kParabolicTolerance) return IsometryClass::Parabolic;
    return IsometryClass::Elliptic;
}

// Sign of the trace; the lift-independent data attached to non-elliptic
// classes all carry this factor.
inline int trace_sign(const IsometryLift& g) {
    const double t = g.trace();
    if (std::abs(t) < 1e-12) {
        throw std::domain_error("trace_sign: trace is numerically zero");
    }
    return t > 0.0 ? 1 : -1;
}

// g V g^{-1} with g^{-1} taken as the adjugate.  Preserves the Killing form
// and is insensitive to the lift sign.
inline Sl2Vector adjoint_action(const IsometryLift& g, const Sl2Vector& v) {
    // V g^{-1}
    const double p11 = v.a * g.m22 - v.b * g.m21;
    const double p12 = -v.a * g.m12 + v.b * g.m11;
    const double p21 = v.c * g.m22 + v.a * g.m21;
    const double p22 = -v.c * g.m12 - v.a * g.m11;
    // g (V g^{-1})
    const double w11 = g.m11 * p11 + g.m12 * p21;
    const double w12 = g.m11 * p12 + g.m12 * p22;
    const double w21 = g.m21 * p11 + g.m22 * p21;
    const double w22 = g.m21 * p12 + g.m22 * p22;
    // Symmetrize the diagonal: the product is traceless up to round-off.
    return {0.5 * (w11 - w22), w12, w21};
}

// cosh(sqrt(q)) and sinh(sqrt(q))/sqrt(q), continued through q <= 0 where
// they become cos(sqrt(-q)) and sin(sqrt(-q))/sqrt(-q).  Shared by the
// matrix exponential and the closed-form deformed traces.
struct CoshSinhc {
    double c;  // cosh-like factor
    double s;  // sinhc-like factor
};

inline CoshSinhc cosh_sinhc(double q) {
    if (q > kExpSeriesThreshold) {
        const double m = std::sqrt(q);
        return {std::cosh(m), std::sinh(m) / m};
    }
    if (q < -kExpSeriesThreshold) {
        const double w = std::sqrt(-q);
        return {std::cos(w), std::sin(w) / w};
    }
    // |q| <= 1e-8: three series terms leave a truncation error below 1e-25.
    return {1.0 + 0.5 * q * (1.0 + q / 12.0), 1.0 + (q / 6.0) * (1.0 + q / 20.0)};
}

// exp(V) = C(q) I + S(q) V with q = a^2 + bc; det = C^2 - q S^2 = 1 exactly.
inline IsometryLift exp_sl2(const Sl2Vector& v) {
    const double q = v.a * v.a + v.b * v.c;
    const auto [c, s] = cosh_sinhc(q);
    return {c + s * v.a, s * v.b, s * v.c, c - s * v.a};
}

// sigma(g) (g - (Tr g / 2) I): the invariant vector of the adjoint action.
// Spacelike with <F,F> = Tr(g)^2/4 - 1 for hyperbolic g, nonzero null for
// parabolic g.  Only the sign (not the scale) is canonical in the parabolic
// case; consumers that need a normalization use neutral_vector_X0 and accept
// the fallback documented there.
inline Sl2Vector invariant_vector_F(const IsometryLift& g) {
    const IsometryClass cls = classify(g);
    if (cls != IsometryClass::Hyperbolic && cls != IsometryClass::Parabolic) {
        throw std::domain_error(
            "invariant_vector_F: defined for hyperbolic and parabolic isometries only");
    }
    const double sgn = static_cast<double>(trace_sign(g));
    return {sgn * 0.5 * (g.m11 - g.m22), sgn * g.m12, sgn * g.m21};
}

// Unit-spacelike neutral vector of a hyperbolic isometry,
//   X0 = 2 sigma(g) (g - (Tr g / 2) I) / sqrt(Tr(g)^2 - 4),
// fixed by the adjoint action and flipped by inversion.  For parabolic g no
// canonical scale exists and the raw invariant vector F is returned instead.
inline Sl2Vector neutral_vector_X0(const IsometryLift& g) {
    const IsometryClass cls = classify(g);
    if (cls == IsometryClass::Hyperbolic) {
        const double t = g.trace();
        const double f = 2.0 * static_cast<double>(trace_sign(g)) /
                         std::sqrt(t * t - 4.0);
        return {f * 0.5 * (g.m11 - g.m22), f * g.m12, f * g.m21};
    }
    if (cls == IsometryClass::Parabolic) {
        return invariant_vector_F(g);
    }
    throw std::domain_error(
        "neutral_vector_X0: defined for hyperbolic and parabolic isometries only");
}

// Translation length of the geodesic axis: 2 arccosh(|Tr|/2) for hyperbolic
// isometries, 0 for parabolic ones.
inline double geodesic_length(const IsometryLift& g) {
    const IsometryClass cls = classify(g);
    if (cls == IsometryClass::Hyperbolic) {
        return 2.0 * std::acosh(std::abs(g.trace()) / 2.0);
    }
    if (cls == IsometryClass::Parabolic) {
        return 0.0;
    }
    throw std::domain_error(
        "geodesic_length: defined for hyperbolic and parabolic isometries only");
}

// Eigenbasis frame of a hyperbolic isometry g: X0 is the unit-spacelike
// neutral vector and Xminus, Xplus are null eigenvectors of the adjoint
// action with Ad(g) Xpm = e^{+-2s} Xpm, where 2 cosh(s) = |Tr g|.  The frame
// satisfies <X0,X0> = 1, <Xpm,Xpm> = 0, <X0,Xpm> = 0, <Xplus,Xminus> = 1/2.
struct HyperbolicFrame {
    Sl2Vector X0;
    Sl2Vector Xminus;
    Sl2Vector Xplus;
};

namespace detail {

// Larger-Euclidean-norm column of a rank-one 2x2 matrix, normalized with a
// deterministic sign (first entry above round-off made positive).
struct Col2 {
    double x, y;
};

inline Col2 dominant_column(double a11, double a12, double a21, double a22) {
    const double n1 = a11 * a11 + a21 * a21;
    const double n2 = a12 * a12 + a22 * a22;
    double x = a11, y = a21;
    if (n2 > n1) {
        x = a12;
        y = a22;
    }
    const double n = std::sqrt(x * x + y * y);
    if (n == 0.0) {
        throw std::domain_error("hyperbolic_frame: degenerate eigenvector");
    }
    x /= n;
    y /= n;
    const double flip = (std::abs(x) > 1e-12 ? x : y) < 0.0 ? -1.0 : 1.0;
    return {flip * x, flip * y};
}

}  // namespace detail

// Frame adapted to a hyperbolic isometry.  The eigenlines determine Xplus
// and Xminus only up to the rescaling (Xplus, Xminus) -> (c Xplus, Xminus/c);
// the returned representative balances the two Euclidean norms and makes the
// first non-negligible component of Xplus positive, which pins a unique
// frame for every lift of the same isometry.
inline HyperbolicFrame hyperbolic_frame(const IsometryLift& g) {
    if (classify(g) != IsometryClass::Hyperbolic) {
        throw std::domain_error("hyperbolic_frame: isometry is not hyperbolic");
    }
    const double sgn = static_cast<double>(trace_sign(g));
    // Work with the lift of positive trace; both lifts share the frame.
    const double h11 = sgn * g.m11, h12 = sgn * g.m12;
    const double h21 = sgn * g.m21, h22 = sgn * g.m22;
    const double t = h11 + h22;
    const double lam = 0.5 * (t + std::sqrt(t * t - 4.0));      // > 1
    const double lam_inv = 1.0 / lam;
    // The lam-eigenline is the column space of (h - lam^{-1} I) and vice
    // versa (Cayley-Hamilton kills (h - lam)(h - lam^{-1})).
    const auto vp = detail::dominant_column(h11 - lam_inv, h12, h21, h22 - lam_inv);
    auto vm = detail::dominant_column(h11 - lam, h12, h21, h22 - lam);
    const double det = vp.x * vm.y - vp.y * vm.x;
    if (std::abs(det) < 1e-12) {
        throw std::domain_error("hyperbolic_frame: eigenvectors are collinear");
    }
    vm.x /= det;
    vm.y /= det;
    // P = [vp | vm] has det 1 and conjugates diag(lam, 1/lam) to h.
    const IsometryLift p{vp.x, vm.x, vp.y, vm.y};
    HyperbolicFrame frame{adjoint_action(p, kE1),
                          adjoint_action(p, Sl2Vector{0.0, 0.0, 1.0}),
                          adjoint_action(p, Sl2Vector{0.0, 1.0, 0.0})};
    // Balance the norms of the null legs and fix the overall sign.
    const double np = frame.Xplus.euclidean_norm();
    const double nm = frame.Xminus.euclidean_norm();
    const double c = std::sqrt(nm / np);
    frame.Xplus = c * frame.Xplus;
    frame.Xminus = (1.0 / c) * frame.Xminus;
    const double lead =
        std::abs(frame.Xplus.a) > 1e-12 * frame.Xplus.euclidean_norm()
            ? frame.Xplus.a
            : (std::abs(frame.Xplus.b) > 1e-12 * frame.Xplus.euclidean_norm()
                   ? frame.Xplus.b
                   : frame.Xplus.c);
    if (lead < 0.0) {
        frame.Xplus = -frame.Xplus;
        frame.Xminus = -frame.Xminus;
    }
    return frame;
}

}  // namespace margulis
