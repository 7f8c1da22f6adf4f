#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "margulis/invariant.hpp"

// Exhaustive sign scan of the Margulis invariant over conjugacy
// representatives: evaluates alpha (alpha_tilde at parabolic words) on every
// cyclically reduced representative up to a length bound, aggregates the
// sign verdict, and cross-checks the zero set against the boundary words
// whose target invariant is zero.

namespace margulis {

// |invariant| at or below this bound counts as zero in the scan.
inline constexpr double kScanZeroTolerance = 1e-8;

enum class ScanVerdict {
    AllPositive,
    AllNegative,
    AllNonnegative,
    AllNonpositive,
    IdenticallyZero,
    Mixed,
};

inline const char* to_string(ScanVerdict v) {
    switch (v) {
        case ScanVerdict::AllPositive: return "AllPositive";
        case ScanVerdict::AllNegative: return "AllNegative";
        case ScanVerdict::AllNonnegative: return "AllNonnegative";
        case ScanVerdict::AllNonpositive: return "AllNonpositive";
        case ScanVerdict::IdenticallyZero: return "IdenticallyZero";
        case ScanVerdict::Mixed: return "Mixed";
    }
    return "?";
}

struct ScanRecord {
    Word word;
    double trace;
    IsometryClass cls;
    double alpha_tilde;
    double alpha;  // normalized at hyperbolic words, alpha_tilde at parabolic
    int sign;      // -1, 0, +1 with |alpha| <= tau_zero counting as 0
};

struct SignReport {
    std::vector<ScanRecord> records;  // in enumeration order (length, lex)
    ScanVerdict verdict = ScanVerdict::IdenticallyZero;
    std::vector<Word> zero_words;
    // Zero words that are not powers of a zero-target boundary word (or of
    // its inverse); a nonempty list falsifies the zero-set refinement.
    std::vector<Word> unexpected_zero_words;
    std::array<double, 3> boundary_invariants{};
    int max_len = 0;
    double tau_zero = kScanZeroTolerance;
};

namespace detail {

// Whether w (a canonical rotation) is conjugate to a power d^k or d^-k.
inline bool is_power_of(const Word& w, const Word& d) {
    if (w.empty() || d.empty()) return false;
    if (w.length() % d.length() != 0) return false;
    const int k = static_cast<int>(w.length() / d.length());
    return w == d.power(k).canonical_rotation() ||
           w == d.inverse().power(k).canonical_rotation();
}

}  // namespace detail

inline SignReport sign_scan(const HolonomyRep& rep, const Cocycle& u, int max_len,
                            double tau_zero = kScanZeroTolerance) {
    if (max_len < 1) {
        throw std::invalid_argument("sign_scan: max_len must be >= 1");
    }
    if (!(tau_zero >= 0.0)) {
        throw std::invalid_argument("sign_scan: tau_zero must be non-negative");
    }
    SignReport report;
    report.max_len = max_len;
    report.tau_zero = tau_zero;

    const BoundaryWords bw = boundary_words();
    const Word bwords[3] = {bw.d1, bw.d2, bw.d3};
    for (int i = 0; i < 3; ++i) {
        report.boundary_invariants[i] = alpha(rep, u, bwords[i]);
    }

    const std::vector<Word> reps = enumerate_conjugacy_reps(max_len);
    report.records.reserve(reps.size());
    bool any_pos = false, any_neg = false, any_zero = false;
    for (const Word& w : reps) {
        const IsometryLift g = evaluate(rep, w);
        const IsometryClass cls = classify(g);
        if (cls != IsometryClass::Hyperbolic && cls != IsometryClass::Parabolic) {
            throw std::domain_error("sign_scan: word '" + w.letters() +
                                    "' evaluates to an " +
                                    std::string(to_string(cls)) +
                                    " element; the representation does not "
                                    "admit a Margulis invariant there");
        }
        const double at = alpha_tilde(rep, u, w);
        const double t = g.trace();
        const double a = cls == IsometryClass::Hyperbolic
                             ? at * 2.0 / std::sqrt(t * t - 4.0)
                             : at;
        int sign = 0;
        if (std::abs(a) > tau_zero) {
            sign = a > 0.0 ? 1 : -1;
        }
        if (sign > 0) any_pos = true;
        if (sign < 0) any_neg = true;
        if (sign == 0) {
            any_zero = true;
            report.zero_words.push_back(w);
        }
        report.records.push_back({w, t, cls, at, a, sign});
    }

    if (any_pos && any_neg) {
        report.verdict = ScanVerdict::Mixed;
    } else if (any_pos) {
        report.verdict = any_zero ? ScanVerdict::AllNonnegative : ScanVerdict::AllPositive;
    } else if (any_neg) {
        report.verdict = any_zero ? ScanVerdict::AllNonpositive : ScanVerdict::AllNegative;
    } else {
        report.verdict = ScanVerdict::IdenticallyZero;
    }

    for (const Word& w : report.zero_words) {
        bool expected = false;
        for (int i = 0; i < 3; ++i) {
            if (std::abs(report.boundary_invariants[i]) <= tau_zero &&
                detail::is_power_of(w, bwords[i])) {
                expected = true;
                break;
            }
        }
        if (!expected) {
            report.unexpected_zero_words.push_back(w);
        }
    }
    return report;
}

}  // namespace margulis
