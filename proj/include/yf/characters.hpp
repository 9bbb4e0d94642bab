#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "yf/lattice.hpp"
#include "yf/rational.hpp"
#include "yf/report.hpp"
#include "yf/words.hpp"

namespace yf {
namespace characters {

/// The grouped product of (6.12): given the 2-positions of u (deltas) and of
/// v (or of a type-I / summable word), multiply (1 - (delta_j + 1)/d) over
/// every d lying in [delta_j, delta_{j+1}); positions below delta_1
/// contribute nothing. This one expression is the normalized character
/// X~_u^v and the evaluation formula for type-I and summable functionals.
inline Rational grouped_character_ratio(std::span<const std::int64_t> deltas,
                                        std::span<const std::int64_t> ds) {
    Rational out = 1;
    std::size_t j = 0;  // index of the largest delta <= current d
    for (std::int64_t d : ds) {
        if (deltas.empty() || d < deltas.front()) continue;
        while (j + 1 < deltas.size() && deltas[j + 1] <= d) ++j;
        out *= Rational(d - deltas[j] - 1, d);
        if (out == 0) return out;
    }
    return out;
}

namespace detail {

inline Int char_rec_impl(std::vector<std::uint8_t> u, std::vector<std::uint8_t> v) {
    // digits rightmost-first; the leftmost letter is at the back
    Int sign = 1;
    Int scale = 1;
    while (!v.empty()) {
        if (v.back() == 1) {
            if (u.back() == 1) {
                u.pop_back();
            } else {
                u.back() = 1;  // X_{2u}^{1v} = X_{1u}^{v}
            }
            v.pop_back();
        } else {
            if (u.back() == 2) {
                sign = -sign;  // X_{2u}^{2v} = -X_u^v
                u.pop_back();
                v.pop_back();
            } else if (u.size() >= 2 && u[u.size() - 2] == 1) {
                // X_{11u}^{2v} = (m(u)+1) X_u^v
                u.pop_back();
                u.pop_back();
                v.pop_back();
                std::int64_t m = 0;
                for (auto it = u.rbegin(); it != u.rend() && *it == 1; ++it) ++m;
                scale *= (m + 1);
            } else {
                return 0;  // X_{12u}^{2v} = 0
            }
        }
    }
    return sign * scale;
}

}  // namespace detail

/// X_u^v by Okada's recurrences (5.19)/(5.20), anchored at X_e^e = 1.
inline Rational char_recursive(const FibWord& u, const FibWord& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("char_recursive: rank mismatch");
    return Rational(detail::char_rec_impl({u.digits().begin(), u.digits().end()},
                                          {v.digits().begin(), v.digits().end()}));
}

/// X_u^v = d(v) * X~_u^v, the product form. Integer-valued: positions of v
/// below delta_1 contribute their own factor d, the rest give d - delta - 1.
inline Rational char_product(const FibWord& u, const FibWord& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("char_product: rank mismatch");
    const auto deltas = u.two_positions();
    Int x = 1;
    std::size_t j = 0;
    for (std::int64_t d : v.two_positions()) {
        if (deltas.empty() || d < deltas.front()) {
            x *= d;
            continue;
        }
        while (j + 1 < deltas.size() && deltas[j + 1] <= d) ++j;
        x *= (d - deltas[j] - 1);
        if (x == 0) return Rational(0);
    }
    return Rational(x);
}

/// Normalized character X~_u^v = X_u^v / d(v).
inline Rational char_normalized(const FibWord& u, const FibWord& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("char_normalized: rank mismatch");
    const auto deltas = u.two_positions();
    const auto ds = v.two_positions();
    return grouped_character_ratio(deltas, ds);
}

/// X_u^v by splitting v along the block ranks of u (Lemma 6.1): zero when v
/// does not split, otherwise d(v_t) g(v_{t-1}) ... g(v_0) with g(1w) = d(w),
/// g(2w) = -d(w).
inline Rational char_block(const FibWord& u, const FibWord& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("char_block: rank mismatch");
    auto blocks = block_data(u).block_ranks;            // (n_0, ..., n_t)
    std::vector<std::int64_t> parts(blocks.rbegin(), blocks.rend());  // (n_t, ..., n_0)
    auto pieces = split(v, parts);
    if (!pieces) return Rational(0);
    Int x = dim_product((*pieces)[0]);
    for (std::size_t i = 1; i < pieces->size(); ++i) {
        const FibWord& piece = (*pieces)[i];
        // pieces below the top block start with the image of a 2 of u, so
        // they are nonempty; their leading digit decides the sign
        std::vector<std::uint8_t> rest(piece.digits().begin(), piece.digits().end());
        const std::uint8_t lead = rest.back();
        rest.pop_back();
        Int d = dim_product(FibWord(std::move(rest)));
        x *= (lead == 1) ? d : -d;
    }
    return Rational(x);
}

/// X_u^v by splitting u along the inverse block ranks of v (Lemma 6.3).
inline Rational char_inverse_entry(const FibWord& u, const FibWord& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("char_inverse_entry: rank mismatch");
    auto parts = block_data(v).inverse_block_ranks;  // already (n_t, ..., n_0)
    auto pieces = split(u, parts);
    if (!pieces) return Rational(0);
    // pieces = (u_t, ..., u_0); factors f_1..f_t, f_j from u_j and the
    // leading-ones count of the concatenation u_{j-1} ... u_0
    const std::size_t t = pieces->size() - 1;
    Int x = 1;
    for (std::size_t j = 1; j <= t; ++j) {
        const FibWord& uj = (*pieces)[t - j];
        if (uj.epsilon() == -1) {
            x = -x;
            continue;
        }
        std::int64_t m = 0;
        bool run = true;
        for (std::size_t b = t - j + 1; b < pieces->size() && run; ++b) {
            const auto& piece = (*pieces)[b];
            for (auto it = piece.digits().rbegin(); it != piece.digits().rend(); ++it) {
                if (*it == 1) {
                    ++m;
                } else {
                    run = false;
                    break;
                }
            }
        }
        x *= (1 + m);
    }
    return Rational(x);
}

enum class Method { recursive, product, block, inverse_block, verify };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::recursive: return "recursive";
        case Method::product: return "product";
        case Method::block: return "block";
        case Method::inverse_block: return "inverse";
        case Method::verify: return "verify";
    }
    return "?";
}

inline Method parse_method(const std::string& s) {
    if (s == "recursive") return Method::recursive;
    if (s == "product") return Method::product;
    if (s == "block") return Method::block;
    if (s == "inverse") return Method::inverse_block;
    if (s == "verify") return Method::verify;
    throw std::invalid_argument("unknown character method: " + s);
}

inline Rational char_entry(const FibWord& u, const FibWord& v, Method m) {
    switch (m) {
        case Method::recursive: return char_recursive(u, v);
        case Method::product: return char_product(u, v);
        case Method::block: return char_block(u, v);
        case Method::inverse_block: return char_inverse_entry(u, v);
        case Method::verify: break;
    }
    Rational a = char_recursive(u, v);
    Rational b = char_product(u, v);
    Rational c = char_block(u, v);
    Rational d = char_inverse_entry(u, v);
    if (!(a == b && b == c && c == d))
        throw std::logic_error("character methods disagree at (" + u.display() + ", " +
                               v.display() + ")");
    return a;
}

namespace detail {

struct TableCache {
    std::mutex mu;
    std::map<int, std::vector<std::vector<Rational>>> tables;
};

inline TableCache& table_cache() {
    static TableCache c;
    return c;
}

}  // namespace detail

/// Cached full table of X_u^v at level n (product method), rows u, columns
/// v in canonical order. Shared by the harmonic evaluators.
inline const std::vector<std::vector<Rational>>& char_table(int n) {
    auto& c = detail::table_cache();
    std::lock_guard lk(c.mu);
    auto it = c.tables.find(n);
    if (it != c.tables.end()) return it->second;
    const auto& lv = lattice::level(n);
    std::vector<std::vector<Rational>> t(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i) {
        t[i].reserve(lv.size());
        for (std::size_t j = 0; j < lv.size(); ++j)
            t[i].push_back(char_product(lv[i], lv[j]));
    }
    return c.tables.emplace(n, std::move(t)).first->second;
}

/// Level-n transition matrix X_u^v, rows u (p-labels), columns v (s-labels),
/// both in canonical order.
struct CharMatrix {
    int n = 0;
    std::vector<FibWord> order;
    std::vector<std::vector<Rational>> rows;

    const Rational& at(const FibWord& u, const FibWord& v) const {
        return rows[lattice::level_index(u)][lattice::level_index(v)];
    }
};

inline CharMatrix char_matrix(int n, Method method = Method::verify, int cap = 12) {
    if (n > cap)
        throw std::domain_error("char_matrix: level " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
    CharMatrix cm;
    cm.n = n;
    cm.order = lattice::level(n);
    cm.rows.resize(cm.order.size());
    for (std::size_t i = 0; i < cm.order.size(); ++i) {
        cm.rows[i].reserve(cm.order.size());
        for (std::size_t j = 0; j < cm.order.size(); ++j)
            cm.rows[i].push_back(char_entry(cm.order[i], cm.order[j], method));
    }
    return cm;
}

/// Four-way agreement of the character methods on a whole level, plus the
/// zero characterization (entry vanishes iff v fails to split along the
/// block ranks of u) and the all-ones row identity X_{1^n}^v = d(v).
inline Report verify_char_agreement(int n_max) {
    Report rep("character four-way agreement");
    for (int n = 0; n <= n_max; ++n) {
        const auto& lv = lattice::level(n);
        for (const auto& u : lv) {
            auto blocks = block_data(u).block_ranks;
            std::vector<std::int64_t> parts(blocks.rbegin(), blocks.rend());
            for (const auto& v : lv) {
                Rational a = char_recursive(u, v);
                Rational b = char_product(u, v);
                Rational c = char_block(u, v);
                Rational d = char_inverse_entry(u, v);
                rep.check(a == b && b == c && c == d,
                          "methods disagree at (" + u.display() + ", " + v.display() + ")");
                const bool splits = split(v, parts).has_value();
                rep.check((a != 0) == splits,
                          "zero characterization fails at (" + u.display() + ", " +
                              v.display() + ")");
            }
        }
        // row u = 1^n carries the dimensions
        std::vector<std::uint8_t> ones(static_cast<std::size_t>(n), 1);
        FibWord all_ones{std::move(ones)};
        for (const auto& v : lv)
            rep.check(char_product(all_ones, v) == Rational(dim_product(v)),
                      "all-ones row != d(v) at " + v.display());
    }
    return rep;
}

/// Inverse transition (6.13): sum_v X_u^v X_{u'}^v / z(u') = [u == u'].
inline Report verify_inverse(int n) {
    Report rep("inverse transition (6.13)");
    const auto& lv = lattice::level(n);
    std::vector<std::vector<Rational>> x(lv.size());
    std::vector<Int> z(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i) {
        z[i] = z_value(lv[i]);
        x[i].reserve(lv.size());
        for (std::size_t j = 0; j < lv.size(); ++j) x[i].push_back(char_product(lv[i], lv[j]));
    }
    for (std::size_t i = 0; i < lv.size(); ++i) {
        for (std::size_t k = 0; k < lv.size(); ++k) {
            Rational s = 0;
            for (std::size_t j = 0; j < lv.size(); ++j) s += x[i][j] * x[k][j];
            s /= Rational(z[k]);
            rep.check(s == (i == k ? 1 : 0),
                      "inverse fails at (" + lv[i].display() + ", " + lv[k].display() + ")");
        }
    }
    return rep;
}

}  // namespace characters
}  // namespace yf
