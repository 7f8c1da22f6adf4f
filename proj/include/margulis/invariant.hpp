#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "margulis/cocycle.hpp"

// Margulis invariants of an affine deformation:
//
//   alpha_tilde(w) = <u(w), F_g>,   alpha(w) = <u(w), X0_g>,   g = evaluate(w),
//
// the non-normalized and normalized pairings of the cocycle value with the
// invariant vector of g.  For parabolic g no canonical normalization of the
// (null) invariant vector exists and alpha falls back to alpha_tilde, whose
// sign is still well defined.

namespace margulis {

namespace detail {

struct WordData {
    std::array<IsometryLift, 4> mats;   // images of a, A, b, B
    std::array<Sl2Vector, 4> vals;      // u(a), u(A), u(b), u(B) in sl(2,R)
    static int index(char c) {
        switch (c) {
            case 'a': return 0;
            case 'A': return 1;
            case 'b': return 2;
            case 'B': return 3;
        }
        throw std::invalid_argument(std::string("invalid letter '") + c + "'");
    }
};

inline WordData word_data(const HolonomyRep& rep, const Cocycle& u) {
    return {{rep.gen_a, rep.gen_a.inverse(), rep.gen_b, rep.gen_b.inverse()},
            {vec_to_sl2(generator_value(rep, u, 'a')),
             vec_to_sl2(generator_value(rep, u, 'A')),
             vec_to_sl2(generator_value(rep, u, 'b')),
             vec_to_sl2(generator_value(rep, u, 'B'))}};
}

}  // namespace detail

// <u(w), F_g> evaluated without forming u(w).  Expanding the cocycle along
// the word and shuffling each term through the trace gives
//
//   <u(w), F_g> = sigma(g)/2 * sum_j Tr(U_j * S_j * P_j),
//
// with U_j the sl(2) value of u at letter j, P_j the prefix before j and S_j
// the suffix from j on.  The rotated products S_j P_j stay at the size of
// the word matrix itself, whereas accumulating u(w) directly squares it; at
// scan lengths the direct route loses enough digits to blur the zero test.
inline double alpha_tilde(const HolonomyRep& rep, const Cocycle& u, const Word& w) {
    const std::string& s = w.letters();
    const std::size_t n = s.size();
    if (n == 0) {
        throw std::domain_error(
            "alpha_tilde: the identity word has no Margulis invariant");
    }
    const detail::WordData data = detail::word_data(rep, u);
    std::vector<IsometryLift> suffix(n + 1, IsometryLift::identity());
    for (std::size_t j = n; j-- > 0;) {
        suffix[j] = data.mats[detail::WordData::index(s[j])] * suffix[j + 1];
    }
    const IsometryLift& g = suffix[0];
    const IsometryClass cls = classify(g);
    if (cls != IsometryClass::Hyperbolic && cls != IsometryClass::Parabolic) {
        throw std::domain_error("alpha_tilde: word '" + s + "' evaluates to an " +
                                std::string(to_string(cls)) + " element");
    }
    const double sgn = static_cast<double>(trace_sign(g));
    double total = 0.0;
    IsometryLift prefix = IsometryLift::identity();
    for (std::size_t j = 0; j < n; ++j) {
        const int idx = detail::WordData::index(s[j]);
        const IsometryLift r = suffix[j] * prefix;
        const Sl2Vector& v = data.vals[idx];
        total += v.a * (r.m11 - r.m22) + v.b * r.m21 + v.c * r.m12;
        prefix = prefix * data.mats[idx];
    }
    return 0.5 * sgn * total;
}

// Normalized invariant <u(w), X0_g>; equals alpha_tilde rescaled by
// 2/sqrt(Tr(g)^2 - 4) at hyperbolic words and alpha_tilde itself at
// parabolic ones.
inline double alpha(const HolonomyRep& rep, const Cocycle& u, const Word& w) {
    const IsometryLift g = evaluate(rep, w);
    const IsometryClass cls = classify(g);
    if (cls == IsometryClass::Hyperbolic) {
        const double t = g.trace();
        return alpha_tilde(rep, u, w) * 2.0 / std::sqrt(t * t - 4.0);
    }
    if (cls == IsometryClass::Parabolic) {
        return alpha_tilde(rep, u, w);
    }
    throw std::domain_error("alpha: word '" + w.letters() + "' evaluates to an " +
                            std::string(to_string(cls)) + " element");
}

// <rho(w)(x) - x, X0_g> at a chosen basepoint x.  Independent of x because
// X0_g is fixed by g, so the (g - 1)x term pairs to zero; equal to alpha(w).
inline double alpha_displacement(const HolonomyRep& rep, const Cocycle& u,
                                 const Word& w, const Vec21& basepoint) {
    const IsometryLift g = evaluate(rep, w);
    const IsometryClass cls = classify(g);
    if (cls != IsometryClass::Hyperbolic && cls != IsometryClass::Parabolic) {
        throw std::domain_error("alpha_displacement: word '" + w.letters() +
                                "' evaluates to an " +
                                std::string(to_string(cls)) + " element");
    }
    const Vec21 axis = sl2_to_vec(neutral_vector_X0(g));
    const AffineIsometry rho = affine_action(rep, u, w);
    return minkowski_dot(rho.apply(basepoint) - basepoint, axis);
}

// Minimum-norm cocycle whose invariants on the boundary words d1, d2, d3
// (alpha at hyperbolic boundaries, alpha_tilde at parabolic ones) hit the
// given targets: solve the 3x6 linear system over the six generator-value
// coordinates via the normal equations A^T (A A^T)^{-1} t.
inline Cocycle solve_boundary_cocycle(const HolonomyRep& rep,
                                      const std::array<double, 3>& targets) {
    const BoundaryWords bw = boundary_words();
    const Word words[3] = {bw.d1, bw.d2, bw.d3};

    auto basis_cocycle = [](int j) {
        Vec21 v{};
        switch (j % 3) {
            case 0: v.x1 = 1.0; break;
            case 1: v.x2 = 1.0; break;
            case 2: v.x3 = 1.0; break;
        }
        return j < 3 ? Cocycle{v, Vec21{}} : Cocycle{Vec21{}, v};
    };

    double a[3][6];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 6; ++j) {
            a[i][j] = alpha(rep, basis_cocycle(j), words[i]);
        }
    }

    // Gram matrix of the three rows.
    double gram[3][3];
    double scale = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
            double sum = 0.0;
            for (int j = 0; j < 6; ++j) sum += a[i][j] * a[k][j];
            gram[i][k] = sum;
            scale = std::max(scale, std::abs(sum));
        }
    }

    // Solve gram * lambda = targets by Gaussian elimination with partial
    // pivoting; a pivot collapse means the boundary invariants do not span
    // three independent directions.
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) m[i][k] = gram[i][k];
        m[i][3] = targets[i];
    }
    const double pivot_floor = 1e-12 * std::max(1.0, scale);
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        }
        if (std::abs(m[pivot][col]) <= pivot_floor) {
            throw std::domain_error(
                "solve_boundary_cocycle: boundary system is rank-deficient "
                "(degenerate representation)");
        }
        if (pivot != col) {
            for (int k = col; k < 4; ++k) std::swap(m[col][k], m[pivot][k]);
        }
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
        }
    }
    const double lambda[3] = {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};

    double coords[6];
    for (int j = 0; j < 6; ++j) {
        coords[j] = lambda[0] * a[0][j] + lambda[1] * a[1][j] + lambda[2] * a[2][j];
    }
    return {Vec21{coords[0], coords[1], coords[2]},
            Vec21{coords[3], coords[4], coords[5]}};
}

}  // namespace margulis
