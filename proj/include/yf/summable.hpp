#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yf/rational.hpp"
#include "yf/value.hpp"
#include "yf/words.hpp"

namespace yf {
namespace boundary {

/// An infinite word over {1,2}, right-anchored, described by the positions
/// of its 2's. Either finitary (all-1 tail after the listed positions) or a
/// listed prefix plus a certified bound on the tail mass sum 1/d_j. The
/// certificate is what keeps every emitted enclosure honest.
struct SummableWord {
    std::vector<std::int64_t> positions;  // strictly increasing, gaps >= 2
    bool finitary = true;
    Rational tail_bound{0};  // upper bound on sum of 1/d_j over tail 2's

    static SummableWord from_positions(std::vector<std::int64_t> pos) {
        SummableWord w;
        w.positions = std::move(pos);
        w.validate();
        return w;
    }

    static SummableWord with_tail(std::vector<std::int64_t> pos, Rational bound) {
        SummableWord w;
        w.positions = std::move(pos);
        w.finitary = false;
        w.tail_bound = std::move(bound);
        w.validate();
        return w;
    }

    /// "positions=3,7,15" (finitary) or "positions=1,4,9;tailbound=0.05".
    static SummableWord parse(const std::string& spec) {
        SummableWord w;
        std::stringstream ss(spec);
        std::string field;
        bool saw_positions = false;
        while (std::getline(ss, field, ';')) {
            auto eq = field.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("SummableWord: bad field \"" + field + "\"");
            std::string key = field.substr(0, eq);
            std::string val = field.substr(eq + 1);
            if (key == "positions") {
                saw_positions = true;
                if (val.empty()) continue;  // 1^infty
                std::stringstream ps(val);
                std::string tok;
                while (std::getline(ps, tok, ','))
                    w.positions.push_back(std::stoll(tok));
            } else if (key == "tailbound") {
                w.finitary = false;
                w.tail_bound = parse_rational(val);
            } else {
                throw std::invalid_argument("SummableWord: unknown field \"" + key + "\"");
            }
        }
        if (!saw_positions) throw std::invalid_argument("SummableWord: missing positions=");
        w.validate();
        return w;
    }

    void validate() const {
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (positions[i] < 1)
                throw std::invalid_argument("SummableWord: positions start at 1");
            if (i > 0 && positions[i] - positions[i - 1] < 2)
                throw std::invalid_argument("SummableWord: a 2 occupies two ranks");
        }
        if (!finitary && tail_bound < 0)
            throw std::invalid_argument("SummableWord: negative tail bound");
    }

    std::int64_t last_listed_position() const {
        return positions.empty() ? 0 : positions.back();
    }

    std::string spec_string() const {
        std::string s = "positions=";
        for (std::size_t i = 0; i < positions.size(); ++i)
            s += (i ? "," : "") + std::to_string(positions[i]);
        if (!finitary) s += ";tailbound=" + rational_to_string(tail_bound);
        return s;
    }

    /// The rightmost n digits as a finite word. Throws when the digit range
    /// reaches past the certified prefix of a non-finitary word.
    FibWord rightmost_digits(std::int64_t n) const {
        std::vector<std::uint8_t> ds;
        ds.reserve(static_cast<std::size_t>(n));
        std::int64_t r = 0;
        std::size_t at = 0;
        while (static_cast<std::int64_t>(ds.size()) < n) {
            if (!finitary && r + 1 > last_listed_position())
                throw std::invalid_argument(
                    "SummableWord: prefix too short to supply " + std::to_string(n) +
                    " digits");
            while (at < positions.size() && positions[at] < r + 1) ++at;
            if (at < positions.size() && positions[at] == r + 1) {
                ds.push_back(2);
                r += 2;
            } else {
                ds.push_back(1);
                r += 1;
            }
        }
        return FibWord(std::move(ds));
    }
};

/// Certified enclosure of the tail product prod (1 - k/d_j) over the
/// unlisted 2's: each factor lies in (0,1) once tail positions exceed k,
/// and 1 - k*T <= prod(1 - k/d_j) <= 1 bounds the rest.
inline Value certified_tail_product(const SummableWord& w, std::int64_t k) {
    if (w.finitary) return Value(Rational(1));
    // tail positions are >= last listed + 2, so they exceed k once the
    // prefix reaches k-1; below that the factor signs are uncertifiable
    if (k >= 2 && w.last_listed_position() < k - 1)
        throw std::invalid_argument(
            "SummableWord: tail not certified for factor index k = " + std::to_string(k) +
            " (prefix must list all positions < " + std::to_string(k) + ")");
    Rational loss = Rational(k) * w.tail_bound;
    Rational lo = loss >= 1 ? Rational(0) : 1 - loss;
    return Value(lo, Rational(1));
}

/// pi(w) = prod over positions >= 2 of (1 - 1/d_j); exact for finite and
/// finitary inputs, certified interval otherwise.
inline Value pi_value(const SummableWord& w) {
    Rational p = 1;
    for (auto d : w.positions)
        if (d >= 2) p *= Rational(d - 1, d);
    return Value(p) * certified_tail_product(w, 1);
}

inline Rational pi_value(const FibWord& v) {
    Rational p = 1;
    for (auto d : v.two_positions())
        if (d >= 2) p *= Rational(d - 1, d);
    return p;
}

/// pi_k(w) = prod over positions >= k-1 of (1 - k/d_j), k >= 2 (signed).
inline Value pi_k_value(const SummableWord& w, std::int64_t k) {
    if (k < 2) throw std::invalid_argument("pi_k_value: k must be >= 2");
    Rational p = 1;
    for (auto d : w.positions)
        if (d >= k - 1) p *= Rational(d - k, d);
    return Value(p) * certified_tail_product(w, k);
}

inline Rational pi_k_value(const FibWord& v, std::int64_t k) {
    if (k < 2) throw std::invalid_argument("pi_k_value: k must be >= 2");
    Rational p = 1;
    for (auto d : v.two_positions())
        if (d >= k - 1) p *= Rational(d - k, d);
    return p;
}

}  // namespace boundary
}  // namespace yf
