#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

/// A finite word over {1,2}, the vertex type of the Young-Fibonacci lattice.
///
/// Digits are stored rightmost-first: digits()[0] is the rightmost letter.
/// Positions of 2's (one plus the rank of the subword to the right) then
/// fall out of a single forward scan with a running rank. Display order is
/// leftmost-first; the empty word prints as "e".
class FibWord {
  public:
    FibWord() = default;

    /// digits given rightmost-first.
    explicit FibWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
        rank_ = 0;
        for (auto d : digits_) {
            if (d != 1 && d != 2) throw std::invalid_argument("FibWord: digit must be 1 or 2");
            rank_ += d;
        }
    }

    /// Parses leftmost-first text; "e" is the empty word, "" is rejected.
    static FibWord parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("FibWord: empty string (use \"e\")");
        if (text == "e") return FibWord();
        std::vector<std::uint8_t> ds;
        ds.reserve(text.size());
        for (auto it = text.rbegin(); it != text.rend(); ++it) {
            if (*it == '1')
                ds.push_back(1);
            else if (*it == '2')
                ds.push_back(2);
            else
                throw std::invalid_argument("FibWord: bad character in \"" + text + "\"");
        }
        return FibWord(std::move(ds));
    }

    std::int64_t rank() const { return rank_; }
    bool empty() const { return digits_.empty(); }
    std::size_t length() const { return digits_.size(); }
    std::span<const std::uint8_t> digits() const { return digits_; }

    std::string display() const {
        if (digits_.empty()) return "e";
        std::string s(digits_.size(), '?');
        for (std::size_t i = 0; i < digits_.size(); ++i)
            s[digits_.size() - 1 - i] = static_cast<char>('0' + digits_[i]);
        return s;
    }

    /// Longest run of 2's at the left end.
    std::int64_t head_length() const {
        std::int64_t h = 0;
        for (auto it = digits_.rbegin(); it != digits_.rend() && *it == 2; ++it) ++h;
        return h;
    }

    /// m(v): number of 1's at the left end.
    std::int64_t leading_ones() const {
        std::int64_t m = 0;
        for (auto it = digits_.rbegin(); it != digits_.rend() && *it == 1; ++it) ++m;
        return m;
    }

    /// +1 if empty or the rightmost digit is 1, else -1.
    int epsilon() const { return (digits_.empty() || digits_.front() == 1) ? +1 : -1; }

    /// Positions of 2's, strictly increasing (consecutive gaps >= 2).
    std::vector<std::int64_t> two_positions() const {
        std::vector<std::int64_t> ps;
        std::int64_t r = 0;
        for (auto d : digits_) {
            if (d == 2) ps.push_back(r + 1);
            r += d;
        }
        return ps;
    }

    /// Runs of 1's: (k_0, ..., k_t) for v = 1^{k_t} 2 1^{k_{t-1}} ... 2 1^{k_0}.
    std::vector<std::int64_t> one_runs() const {
        std::vector<std::int64_t> ks;
        std::int64_t cur = 0;
        for (auto d : digits_) {
            if (d == 1) {
                ++cur;
            } else {
                ks.push_back(cur);
                cur = 0;
            }
        }
        ks.push_back(cur);
        return ks;
    }

    FibWord prepend_one() const {
        auto ds = digits_;
        ds.push_back(1);
        return FibWord(std::move(ds));
    }

    /// Concatenation uv: this word to the left of `right`.
    FibWord concat(const FibWord& right) const {
        std::vector<std::uint8_t> ds(right.digits_.begin(), right.digits_.end());
        ds.insert(ds.end(), digits_.begin(), digits_.end());
        return FibWord(std::move(ds));
    }

    friend bool operator==(const FibWord& a, const FibWord& b) {
        return a.digits_ == b.digits_;
    }
    friend bool operator!=(const FibWord& a, const FibWord& b) { return !(a == b); }

    /// Canonical order: by rank, then lexicographic on leftmost-first display.
    friend bool operator<(const FibWord& a, const FibWord& b) {
        if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
        return std::lexicographical_compare(a.digits_.rbegin(), a.digits_.rend(),
                                            b.digits_.rbegin(), b.digits_.rend());
    }

  private:
    std::vector<std::uint8_t> digits_;  // rightmost-first
    std::int64_t rank_ = 0;
};

inline FibWord operator"" _w(const char* s, std::size_t) { return FibWord::parse(s); }

struct WordStats {
    std::int64_t rank = 0;
    std::int64_t head_length = 0;
    std::int64_t leading_ones = 0;
    int epsilon = +1;
    std::vector<std::int64_t> two_positions;
};

inline FibWord parse_word(const std::string& text) { return FibWord::parse(text); }

inline WordStats word_stats(const FibWord& v) {
    return WordStats{v.rank(), v.head_length(), v.leading_ones(), v.epsilon(),
                     v.two_positions()};
}

/// Covering words, by the three rules: prepend a 1; turn the first 1 into a
/// 2; insert a 1 in between head 2's or right after the last one.
inline std::vector<FibWord> successors(const FibWord& v) {
    std::vector<std::uint8_t> base(v.digits().begin(), v.digits().end());
    std::vector<FibWord> out;
    out.push_back(v.prepend_one());
    // first 1 reading left to right = last 1 in rightmost-first storage
    for (std::size_t i = base.size(); i-- > 0;) {
        if (base[i] == 1) {
            auto ds = base;
            ds[i] = 2;
            out.emplace_back(std::move(ds));
            break;
        }
    }
    const auto h = static_cast<std::size_t>(v.head_length());
    for (std::size_t k = 1; k <= h; ++k) {
        auto ds = base;
        ds.insert(ds.end() - static_cast<std::ptrdiff_t>(k), 1);
        out.emplace_back(std::move(ds));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Covered words: remove the leftmost 1, or swap any head 2 for a 1.
inline std::vector<FibWord> predecessors(const FibWord& v) {
    std::vector<std::uint8_t> base(v.digits().begin(), v.digits().end());
    std::vector<FibWord> out;
    for (std::size_t i = base.size(); i-- > 0;) {
        if (base[i] == 1) {
            auto ds = base;
            ds.erase(ds.begin() + static_cast<std::ptrdiff_t>(i));
            out.emplace_back(std::move(ds));
            break;
        }
    }
    const std::size_t len = base.size();
    const auto h = static_cast<std::size_t>(v.head_length());
    for (std::size_t k = 1; k <= h && k <= len; ++k) {
        auto ds = base;
        ds.at(len - k) = 1;
        out.emplace_back(std::move(ds));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// d(v): the product of the positions of 2's (empty product = 1). Equals the
/// number of maximal chains from the empty word to v.
inline Int dim_product(const FibWord& v) {
    Int d = 1;
    for (auto p : v.two_positions()) d *= p;
    return d;
}

/// z(v) = k_t! (k_{t-1}+2) k_{t-1}! ... (k_0+2) k_0!.
inline Int z_value(const FibWord& v) {
    auto ks = v.one_runs();
    Int z = factorial(ks.back());
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) z *= (ks[i] + 2) * factorial(ks[i]);
    return z;
}

struct BlockData {
    std::vector<std::int64_t> block_ranks;          // (k_0+2, ..., k_{t-1}+2, k_t)
    std::vector<std::int64_t> inverse_block_ranks;  // (k_t+2, ..., k_1+2, k_0)
};

inline BlockData block_data(const FibWord& v) {
    auto ks = v.one_runs();
    BlockData b;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) b.block_ranks.push_back(ks[i] + 2);
    b.block_ranks.push_back(ks.back());
    if (ks.size() == 1) {
        b.inverse_block_ranks.push_back(ks[0]);
    } else {
        b.inverse_block_ranks.push_back(ks.back() + 2);
        for (std::size_t i = ks.size() - 1; i-- > 1;) b.inverse_block_ranks.push_back(ks[i] + 2);
        b.inverse_block_ranks.push_back(ks[0]);
    }
    return b;
}

/// Splits v = v_t ... v_1 v_0 with |v_i| = parts[t-i]; parts are listed
/// (n_t, ..., n_0) and the rank budget is consumed from the right end, v_0
/// first. Returns nothing when a part boundary falls inside a 2.
inline std::optional<std::vector<FibWord>> split(const FibWord& v,
                                                 std::span<const std::int64_t> parts) {
    std::int64_t total = 0;
    for (auto p : parts) {
        if (p < 0) throw std::invalid_argument("split: negative part");
        total += p;
    }
    if (total != v.rank()) throw std::invalid_argument("split: parts do not sum to the rank");
    auto ds = v.digits();
    std::vector<FibWord> pieces(parts.size());
    std::size_t at = 0;
    for (std::size_t j = parts.size(); j-- > 0;) {  // consume n_0 first
        const std::int64_t need = parts[j];
        std::int64_t got = 0;
        std::vector<std::uint8_t> piece;
        while (got < need) {
            got += ds[at];
            piece.push_back(ds[at]);
            ++at;
        }
        if (got != need) return std::nullopt;  // boundary fell inside a 2
        pieces[j] = FibWord(std::move(piece));
    }
    return pieces;
}

inline std::optional<std::vector<FibWord>> split(const FibWord& v,
                                                 const std::vector<std::int64_t>& parts) {
    return split(v, std::span<const std::int64_t>(parts));
}

}  // namespace yf
