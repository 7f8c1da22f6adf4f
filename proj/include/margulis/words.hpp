#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Reduced words in the free group on two generators a, b.  Capital letters
// denote inverses (A = a^{-1}, B = b^{-1}); the letter order used everywhere
// for lexicographic purposes is a < A < b < B.

namespace margulis {

inline int letter_rank(char c) {
    switch (c) {
        case 'a': return 0;
        case 'A': return 1;
        case 'b': return 2;
        case 'B': return 3;
    }
    throw std::invalid_argument(std::string("letter_rank: invalid letter '") + c +
                                "' (alphabet is a, A, b, B)");
}

inline char inverse_letter(char c) {
    switch (c) {
        case 'a': return 'A';
        case 'A': return 'a';
        case 'b': return 'B';
        case 'B': return 'b';
    }
    throw std::invalid_argument(std::string("inverse_letter: invalid letter '") + c +
                                "'");
}

// Lexicographic comparison under the rank order a < A < b < B (which differs
// from ASCII order).
inline bool rank_less(std::string_view x, std::string_view y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int rx = letter_rank(x[i]);
        const int ry = letter_rank(y[i]);
        if (rx != ry) return rx < ry;
    }
    return x.size() < y.size();
}

// A freely reduced word; the empty word is the identity.
class Word {
  public:
    Word() = default;

    // Free reduction of an arbitrary string over the alphabet; rejects any
    // other symbol.
    static Word reduce(std::string_view letters) {
        std::string out;
        out.reserve(letters.size());
        for (char c : letters) {
            letter_rank(c);  // validates
            if (!out.empty() && out.back() == inverse_letter(c)) {
                out.pop_back();
            } else {
                out.push_back(c);
            }
        }
        return Word(std::move(out));
    }

    const std::string& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const {
        std::string out;
        out.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            out.push_back(inverse_letter(*it));
        }
        return Word(std::move(out));
    }

    friend Word operator*(const Word& x, const Word& y) {
        return reduce(x.letters_ + y.letters_);
    }

    Word power(int n) const {
        if (n < 0) return inverse().power(-n);
        std::string repeated;
        repeated.reserve(letters_.size() * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) repeated += letters_;
        return reduce(repeated);
    }

    bool cyclically_reduced() const {
        return letters_.empty() ||
               letters_.front() != inverse_letter(letters_.back());
    }

    // Conjugate obtained by moving the first k letters to the end.  Only a
    // cyclically reduced word keeps its length under rotation; other words
    // are re-reduced.
    Word rotated(std::size_t k) const {
        if (letters_.empty()) return Word();
        k %= letters_.size();
        return reduce(letters_.substr(k) + letters_.substr(0, k));
    }

    // Lexicographically least rotation under a < A < b < B; the canonical
    // representative of the cyclic-rotation class of a cyclically reduced
    // word.
    Word canonical_rotation() const {
        const std::size_t n = letters_.size();
        if (n == 0) return Word();
        std::size_t best = 0;
        for (std::size_t k = 1; k < n; ++k) {
            // Compare rotation k against rotation best, letter by letter.
            for (std::size_t i = 0; i < n; ++i) {
                const int rk = letter_rank(letters_[(k + i) % n]);
                const int rb = letter_rank(letters_[(best + i) % n]);
                if (rk != rb) {
                    if (rk < rb) best = k;
                    break;
                }
            }
        }
        return Word(letters_.substr(best) + letters_.substr(0, best));
    }

    friend bool operator==(const Word& x, const Word& y) {
        return x.letters_ == y.letters_;
    }
    friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }

  private:
    explicit Word(std::string reduced) : letters_(std::move(reduced)) {}

    std::string letters_;
};

namespace detail {

inline bool is_least_rotation(const std::string& s) {
    const std::size_t n = s.size();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const int rk = letter_rank(s[(k + i) % n]);
            const int r0 = letter_rank(s[i]);
            if (rk != r0) {
                if (rk < r0) return false;
                break;
            }
        }
    }
    return true;
}

}  // namespace detail

// One representative per cyclic-rotation class of cyclically reduced words
// of length 1..max_len: the lexicographically least rotation, emitted in
// (length, lexicographic) order.  Inverse pairs are both listed.
inline std::vector<Word> enumerate_conjugacy_reps(int max_len) {
    if (max_len < 1) {
        throw std::invalid_argument("enumerate_conjugacy_reps: max_len must be >= 1");
    }
    std::vector<Word> out;
    std::string cur;
    auto dfs = [&](auto&& self, std::size_t target) -> void {
        if (cur.size() == target) {
            if (cur.front() != inverse_letter(cur.back()) &&
                detail::is_least_rotation(cur)) {
                out.push_back(Word::reduce(cur));
            }
            return;
        }
        for (char c : {'a', 'A', 'b', 'B'}) {
            if (!cur.empty() && cur.back() == inverse_letter(c)) continue;
            cur.push_back(c);
            self(self, target);
            cur.pop_back();
        }
    };
    for (int len = 1; len <= max_len; ++len) {
        dfs(dfs, static_cast<std::size_t>(len));
    }
    return out;
}

}  // namespace margulis
