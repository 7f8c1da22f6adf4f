#pragma once

#include <cmath>
#include <stdexcept>

// The Lorentzian vector space R^{2,1} and the traceless 2x2 matrices sl(2,R),
// identified isometrically through the basis
//
//   E1 = [[1,0],[0,-1]],  E2 = [[0,1],[1,0]],  E3 = [[0,1],[-1,0]],
//
// which is orthonormal for the form <V,W> = (1/2) Tr(VW) with signature (2,1).

namespace margulis {

// Vector in R^{2,1}; the inner product is x1*y1 + x2*y2 - x3*y3.
struct Vec21 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    Vec21() = default;
    Vec21(double x1_, double x2_, double x3_) : x1(x1_), x2(x2_), x3(x3_) {
        if (!(std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3))) {
            throw std::invalid_argument("Vec21: entries must be finite");
        }
    }

    friend Vec21 operator+(const Vec21& u, const Vec21& v) {
        return {u.x1 + v.x1, u.x2 + v.x2, u.x3 + v.x3};
    }
    friend Vec21 operator-(const Vec21& u, const Vec21& v) {
        return {u.x1 - v.x1, u.x2 - v.x2, u.x3 - v.x3};
    }
    friend Vec21 operator-(const Vec21& v) { return {-v.x1, -v.x2, -v.x3}; }
    friend Vec21 operator*(double t, const Vec21& v) {
        return {t * v.x1, t * v.x2, t * v.x3};
    }

    double euclidean_norm() const {
        return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
    }
};

inline double minkowski_dot(const Vec21& x, const Vec21& y) {
    return x.x1 * y.x1 + x.x2 * y.x2 - x.x3 * y.x3;
}

enum class CausalClass { Zero, Null, Timelike, Spacelike };

inline const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::Zero: return "Zero";
        case CausalClass::Null: return "Null";
        case CausalClass::Timelike: return "Timelike";
        case CausalClass::Spacelike: return "Spacelike";
    }
    return "?";
}

// |<x,x>| below this fraction of the squared Euclidean size counts as null,
// so the classification is stable under round-off.
inline constexpr double kNullTolerance = 1e-9;

inline CausalClass causal_class(const Vec21& x) {
    if (x.x1 == 0.0 && x.x2 == 0.0 && x.x3 == 0.0) return CausalClass::Zero;
    const double q = minkowski_dot(x, x);
    const double scale = x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
    if (std::abs(q) <= kNullTolerance * scale) return CausalClass::Null;
    return q < 0.0 ? CausalClass::Timelike : CausalClass::Spacelike;
}

// Traceless 2x2 real matrix [[a, b], [c, -a]]; tracelessness is structural,
// only the three free entries are stored.
struct Sl2Vector {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    friend Sl2Vector operator+(const Sl2Vector& v, const Sl2Vector& w) {
        return {v.a + w.a, v.b + w.b, v.c + w.c};
    }
    friend Sl2Vector operator-(const Sl2Vector& v, const Sl2Vector& w) {
        return {v.a - w.a, v.b - w.b, v.c - w.c};
    }
    friend Sl2Vector operator-(const Sl2Vector& v) { return {-v.a, -v.b, -v.c}; }
    friend Sl2Vector operator*(double t, const Sl2Vector& v) {
        return {t * v.a, t * v.b, t * v.c};
    }

    double euclidean_norm() const {
        return std::sqrt(a * a + b * b + c * c);
    }
};

inline constexpr Sl2Vector kE1{1.0, 0.0, 0.0};
inline constexpr Sl2Vector kE2{0.0, 1.0, 1.0};
inline constexpr Sl2Vector kE3{0.0, 1.0, -1.0};

// <V,W> = (1/2) Tr(VW).
inline double killing_form(const Sl2Vector& v, const Sl2Vector& w) {
    return v.a * w.a + 0.5 * (v.b * w.c + v.c * w.b);
}

inline Vec21 sl2_to_vec(const Sl2Vector& v) {
    return {v.a, 0.5 * (v.b + v.c), 0.5 * (v.b - v.c)};
}

inline Sl2Vector vec_to_sl2(const Vec21& x) {
    return {x.x1, x.x2 + x.x3, x.x2 - x.x3};
}

}  // namespace margulis
