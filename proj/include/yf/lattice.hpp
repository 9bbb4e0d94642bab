#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yf/rational.hpp"
#include "yf/report.hpp"
#include "yf/words.hpp"

namespace yf {
namespace lattice {

namespace detail {

struct Caches {
    std::mutex mu;
    // deque keeps references to built levels stable while new ones append
    std::deque<std::vector<FibWord>> levels;  // levels[n] in canonical order
    std::map<std::pair<FibWord, FibWord>, Int> paths;
    int level_cap = 30;
};

inline Caches& caches() {
    static Caches c;
    return c;
}

inline void build_level(std::vector<FibWord>& out, std::vector<std::uint8_t>& prefix,
                        std::int64_t remaining) {
    if (remaining == 0) {
        // prefix is leftmost-first; FibWord wants rightmost-first
        std::vector<std::uint8_t> ds(prefix.rbegin(), prefix.rend());
        out.emplace_back(std::move(ds));
        return;
    }
    prefix.push_back(1);
    build_level(out, prefix, remaining - 1);
    prefix.back() = 2;
    if (remaining >= 2) build_level(out, prefix, remaining - 2);
    prefix.pop_back();
}

}  // namespace detail

inline int level_cap() {
    std::lock_guard lk(detail::caches().mu);
    return detail::caches().level_cap;
}

inline void set_level_cap(int cap) {
    if (cap < 0) throw std::invalid_argument("set_level_cap: negative cap");
    std::lock_guard lk(detail::caches().mu);
    detail::caches().level_cap = cap;
}

/// All words of rank n, ascending lexicographic on leftmost-first display.
inline const std::vector<FibWord>& level(int n) {
    if (n < 0) throw std::invalid_argument("level: negative rank");
    auto& c = detail::caches();
    std::lock_guard lk(c.mu);
    if (n > c.level_cap)
        throw std::domain_error("level: rank " + std::to_string(n) + " exceeds cap " +
                                std::to_string(c.level_cap));
    while (static_cast<int>(c.levels.size()) <= n) {
        int m = static_cast<int>(c.levels.size());
        std::vector<FibWord> lv;
        std::vector<std::uint8_t> prefix;
        detail::build_level(lv, prefix, m);
        c.levels.push_back(std::move(lv));
    }
    return c.levels[static_cast<std::size_t>(n)];
}

/// Index of w within level(|w|).
inline std::size_t level_index(const FibWord& w) {
    const auto& lv = level(static_cast<int>(w.rank()));
    auto it = std::lower_bound(lv.begin(), lv.end(), w);
    if (it == lv.end() || !(*it == w)) throw std::logic_error("level_index: word not found");
    return static_cast<std::size_t>(it - lv.begin());
}

/// d(u,v): number of saturated chains from u to v (0 when u is not below v).
inline Int path_count(const FibWord& u, const FibWord& v) {
    if (u.rank() > v.rank()) return 0;
    if (u.rank() == v.rank()) return u == v ? 1 : 0;
    auto& c = detail::caches();
    {
        std::lock_guard lk(c.mu);
        auto it = c.paths.find({u, v});
        if (it != c.paths.end()) return it->second;
    }
    Int total = 0;
    for (const auto& x : predecessors(v)) total += path_count(u, x);
    std::lock_guard lk(c.mu);
    return c.paths.emplace(std::pair{u, v}, std::move(total)).first->second;
}

inline Int dim(const FibWord& v) { return dim_product(v); }

/// d(., target) on every level 0..|target|, aligned with canonical order.
inline std::vector<std::vector<Int>> paths_to(const FibWord& target) {
    const int top = static_cast<int>(target.rank());
    std::vector<std::vector<Int>> table(static_cast<std::size_t>(top) + 1);
    table[top].assign(level(top).size(), 0);
    table[top][level_index(target)] = 1;
    for (int m = top; m-- > 0;) {
        const auto& lv = level(m);
        table[m].assign(lv.size(), 0);
        for (std::size_t i = 0; i < lv.size(); ++i) {
            Int s = 0;
            for (const auto& y : successors(lv[i])) s += table[m + 1][level_index(y)];
            table[m][i] = std::move(s);
        }
    }
    return table;
}

/// d(source, .) on every level |source|..n_max.
inline std::vector<std::vector<Int>> paths_from(const FibWord& source, int n_max) {
    const int bot = static_cast<int>(source.rank());
    if (n_max < bot) throw std::invalid_argument("paths_from: n_max below source rank");
    std::vector<std::vector<Int>> table(static_cast<std::size_t>(n_max) + 1);
    table[bot].assign(level(bot).size(), 0);
    table[bot][level_index(source)] = 1;
    for (int m = bot; m < n_max; ++m) {
        const auto& up = level(m + 1);
        table[m + 1].assign(up.size(), 0);
        for (std::size_t i = 0; i < up.size(); ++i) {
            Int s = 0;
            for (const auto& x : predecessors(up[i])) s += table[m][level_index(x)];
            table[m + 1][i] = std::move(s);
        }
    }
    return table;
}

struct KernelValue {
    Int paths;      // d(v,w)
    Int dimension;  // d(w)
    Rational value; // K(v,w) in [0,1]
};

/// Martin kernel K(v,w) = d(v,w)/d(w).
inline KernelValue martin_kernel(const FibWord& v, const FibWord& w) {
    KernelValue k;
    k.paths = path_count(v, w);
    k.dimension = dim_product(w);
    k.value = Rational(k.paths, k.dimension);
    return k;
}

/// A function on one level of the lattice, dense in canonical order. The
/// one irregular state: apply_D at level 0 yields level = 0 with no values.
struct LevelFn {
    int level = 0;
    std::vector<Rational> values;

    static LevelFn zero(int n) {
        return LevelFn{n, std::vector<Rational>(lattice::level(n).size(), Rational(0))};
    }
    static LevelFn indicator(const FibWord& v) {
        auto f = zero(static_cast<int>(v.rank()));
        f.values[level_index(v)] = 1;
        return f;
    }
    const Rational& at(const FibWord& v) const {
        if (v.rank() != level) throw std::invalid_argument("LevelFn::at: rank mismatch");
        return values[level_index(v)];
    }
    Rational sum() const {
        Rational s = 0;
        for (const auto& x : values) s += x;
        return s;
    }
};

/// Creation operator: (U f)(w) = sum of f over words covered by w.
/// Takes level n to level n+1.
inline LevelFn apply_U(const LevelFn& f) {
    LevelFn out = LevelFn::zero(f.level + 1);
    const auto& up = level(f.level + 1);
    for (std::size_t i = 0; i < up.size(); ++i) {
        Rational s = 0;
        for (const auto& x : predecessors(up[i])) s += f.values[level_index(x)];
        out.values[i] = std::move(s);
    }
    return out;
}

/// Annihilation operator: (D f)(u) = sum of f over covers of u. Takes level
/// n to level n-1; at level 0 it returns the empty function (no values).
inline LevelFn apply_D(const LevelFn& f) {
    if (f.level == 0) return LevelFn{0, {}};
    LevelFn out = LevelFn::zero(f.level - 1);
    const auto& down = level(f.level - 1);
    for (std::size_t i = 0; i < down.size(); ++i) {
        Rational s = 0;
        for (const auto& y : successors(down[i])) s += f.values[level_index(y)];
        out.values[i] = std::move(s);
    }
    return out;
}

/// (D1) distinct pairs share as many covers as co-covers (0 or 1 each),
/// (D2) covers = co-covers + 1, and DU - UD = I on every indicator.
inline Report verify_differential(int n_max) {
    Report rep("poset axioms (D1/D2/Weyl)");
    for (int n = 0; n <= n_max; ++n) {
        const auto& lv = level(n);
        std::vector<std::vector<FibWord>> succ(lv.size()), pred(lv.size());
        for (std::size_t i = 0; i < lv.size(); ++i) {
            succ[i] = successors(lv[i]);
            pred[i] = predecessors(lv[i]);
        }
        auto common = [](const std::vector<FibWord>& a, const std::vector<FibWord>& b) {
            std::size_t cnt = 0;
            auto i = a.begin();
            auto j = b.begin();
            while (i != a.end() && j != b.end()) {
                if (*i == *j) ++cnt, ++i, ++j;
                else if (*i < *j) ++i;
                else ++j;
            }
            return cnt;
        };
        for (std::size_t i = 0; i < lv.size(); ++i) {
            // (D2)
            rep.check(succ[i].size() == pred[i].size() + 1,
                      "D2 fails at " + lv[i].display());
            for (std::size_t j = i + 1; j < lv.size(); ++j) {
                auto up = common(succ[i], succ[j]);
                auto down = common(pred[i], pred[j]);
                rep.check(up == down && up <= 1,
                          "D1 fails at (" + lv[i].display() + ", " + lv[j].display() + ")");
            }
        }
        // Weyl identity on the indicator basis of this level
        for (std::size_t i = 0; i < lv.size(); ++i) {
            LevelFn f = LevelFn::indicator(lv[i]);
            LevelFn du = apply_D(apply_U(f));
            LevelFn ud = f.level == 0 ? LevelFn::zero(0) : apply_U(apply_D(f));
            bool good = true;
            for (std::size_t j = 0; j < lv.size(); ++j) {
                Rational expect = (i == j) ? 1 : 0;
                if (du.values[j] - ud.values[j] != expect) good = false;
            }
            rep.check(good, "Weyl DU-UD=I fails at " + lv[i].display());
        }
    }
    return rep;
}

/// (A.2.1) for |v| <= n_max_sum and (A.2.3) for all pairs u <= v with
/// |v| <= n_max_pairs.
inline Report verify_sum_identities(int n_max_sum, int n_max_pairs) {
    Report rep("sum identities (A.2.1/A.2.3)");
    for (int n = 0; n <= n_max_sum; ++n) {
        for (const auto& v : level(n)) {
            Int lhs = 0;
            for (const auto& w : successors(v)) lhs += dim_product(w);
            rep.check(lhs == Int(n + 1) * dim_product(v), "A.2.1 fails at " + v.display());
        }
    }
    for (int k = 0; k <= n_max_pairs; ++k) {
        for (const auto& u : level(k)) {
            auto table = paths_from(u, n_max_pairs + 1);
            auto preds = predecessors(u);
            std::vector<std::vector<std::vector<Int>>> pred_tables;
            pred_tables.reserve(preds.size());
            for (const auto& x : preds) pred_tables.push_back(paths_from(x, n_max_pairs));
            for (int n = k; n <= n_max_pairs; ++n) {
                const auto& lv = level(n);
                for (std::size_t i = 0; i < lv.size(); ++i) {
                    const Int& duv = table[n][i];
                    if (duv == 0 && !(u == lv[i])) continue;  // only pairs u <= v
                    Int up = 0;
                    for (const auto& w : successors(lv[i]))
                        up += table[n + 1][level_index(w)];
                    Int down = 0;
                    for (const auto& pt : pred_tables) down += pt[n][i];
                    rep.check(up - down == Int(n - k + 1) * duv,
                              "A.2.3 fails at (" + u.display() + ", " + lv[i].display() + ")");
                }
            }
        }
    }
    return rep;
}

inline Report verify_sum_identities(int n_max) { return verify_sum_identities(n_max, n_max); }

}  // namespace lattice
}  // namespace yf
