#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yf/lattice.hpp"
#include "yf/rational.hpp"
#include "yf/report.hpp"
#include "yf/words.hpp"

namespace yf {
namespace ncpoly {

/// Element of R = Q<X,Y>, deg X = 1, deg Y = 2. Terms map the monomial
/// h_v = X^{k_0} Y X^{k_1} ... Y X^{k_t} to its coefficient, keyed by the
/// Fibonacci word v = 1^{k_t} 2 ... 2 1^{k_0} itself; zero coefficients are
/// never stored. The letter sequence of h_v read left to right is exactly
/// the digit sequence of v read right to left (X = 1, Y = 2), so monomial
/// concatenation is word concatenation in the opposite order.
class NcPoly {
  public:
    using Terms = std::map<FibWord, Rational>;

    NcPoly() = default;

    static NcPoly zero() { return NcPoly(); }
    static NcPoly one() { return monomial(FibWord(), 1); }
    static NcPoly x() { return monomial(FibWord::parse("1"), 1); }
    static NcPoly y() { return monomial(FibWord::parse("2"), 1); }

    static NcPoly monomial(const FibWord& w, const Rational& coef) {
        NcPoly p;
        if (coef != 0) p.terms_[w] = coef;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const FibWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Degree when homogeneous; nullopt for 0 or mixed-degree elements.
    std::optional<std::int64_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        std::int64_t d = terms_.begin()->first.rank();
        for (const auto& [w, c] : terms_)
            if (w.rank() != d) return std::nullopt;
        return d;
    }

    NcPoly& operator+=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NcPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
    friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    /// Terms in canonical key order, "coef*WORD" joined with +/-.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (first) {
                os << c.str();
                first = false;
            } else {
                os << (c >= 0 ? " + " : " - ") << (c >= 0 ? c : -c).str();
            }
            os << "*" << w.display();
        }
        return os.str();
    }

    void add_term(const FibWord& w, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

  private:
    Terms terms_;
};

/// h_u * h_v = h at the concatenated exponent word (vu as displayed words).
inline NcPoly nc_mul(const NcPoly& f, const NcPoly& g) {
    NcPoly out;
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms()) out.add_term(v.concat(u), a * b);
    return out;
}

inline NcPoly operator*(const NcPoly& a, const NcPoly& b) { return nc_mul(a, b); }

struct NcMatrix {
    std::size_t n = 0;
    std::vector<NcPoly> entries;  // row-major

    explicit NcMatrix(std::size_t size) : n(size), entries(size * size) {}
    NcPoly& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    const NcPoly& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

namespace detail {

inline NcPoly det_expand(const NcMatrix& m, std::size_t col, std::vector<std::size_t>& rows) {
    if (col == m.n) return NcPoly::one();
    NcPoly total;
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const std::size_t r = rows[idx];
        const NcPoly& entry = m.at(r, col);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(rows.size() - 1);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != idx) rest.push_back(rows[j]);
        NcPoly sub = det_expand(m, col + 1, rest);
        NcPoly term = nc_mul(entry, sub);
        if (idx % 2 == 1) term *= Rational(-1);
        total += term;
    }
    return total;
}

}  // namespace detail

/// Column-ordered non-commutative determinant: factors of each summand are
/// taken column by column. n! summands; capped because it is an oracle.
inline NcPoly nc_det(const NcMatrix& m, std::size_t cap = 8) {
    if (m.n > cap)
        throw std::domain_error("nc_det: size " + std::to_string(m.n) + " exceeds cap " +
                                std::to_string(cap));
    if (m.n == 0) return NcPoly::one();
    std::vector<std::size_t> rows(m.n);
    for (std::size_t i = 0; i < m.n; ++i) rows[i] = i;
    return detail::det_expand(m, 0, rows);
}

/// Tridiagonal matrix whose determinant is P_n.
inline NcMatrix p_det_matrix(std::size_t n) {
    NcMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = NcPoly::x();
        if (i + 1 < n) {
            m.at(i, i + 1) = NcPoly::y();
            m.at(i + 1, i) = NcPoly::one();
        }
    }
    return m;
}

/// Size-n matrix whose determinant is Q_{n-1}.
inline NcMatrix q_det_matrix(std::size_t n) {
    NcMatrix m = p_det_matrix(n);
    m.at(0, 0) = NcPoly::y();
    if (n >= 2) m.at(1, 0) = NcPoly::x();
    return m;
}

namespace detail {

struct PolyCaches {
    std::mutex mu;
    std::vector<NcPoly> p_polys;  // P_0, P_1, ...
    std::vector<NcPoly> q_polys;  // Q_0, Q_1, ...
};

inline PolyCaches& poly_caches() {
    static PolyCaches c;
    return c;
}

}  // namespace detail

/// P_{n+1} = P_n X - P_{n-1} Y with P_{-1} = 0, P_0 = 1.
inline NcPoly P_poly(int n) {
    if (n < 0) throw std::invalid_argument("P_poly: negative index");
    auto& c = detail::poly_caches();
    std::lock_guard lk(c.mu);
    if (c.p_polys.empty()) {
        c.p_polys.push_back(NcPoly::one());
        c.p_polys.push_back(NcPoly::x());
    }
    while (static_cast<int>(c.p_polys.size()) <= n) {
        const auto& cur = c.p_polys[c.p_polys.size() - 1];
        const auto& prev = c.p_polys[c.p_polys.size() - 2];
        c.p_polys.push_back(nc_mul(cur, NcPoly::x()) - nc_mul(prev, NcPoly::y()));
    }
    return c.p_polys[static_cast<std::size_t>(n)];
}

/// Q_{n+1} = Q_n X - Q_{n-1} Y with Q_0 = Y and Q_1 = YX - XY.
inline NcPoly Q_poly(int n) {
    if (n < 0) throw std::invalid_argument("Q_poly: negative index");
    auto& c = detail::poly_caches();
    std::lock_guard lk(c.mu);
    if (c.q_polys.empty()) {
        c.q_polys.push_back(NcPoly::y());
        c.q_polys.push_back(nc_mul(NcPoly::y(), NcPoly::x()) -
                            nc_mul(NcPoly::x(), NcPoly::y()));
    }
    while (static_cast<int>(c.q_polys.size()) <= n) {
        const auto& cur = c.q_polys[c.q_polys.size() - 1];
        const auto& prev = c.q_polys[c.q_polys.size() - 2];
        c.q_polys.push_back(nc_mul(cur, NcPoly::x()) - nc_mul(prev, NcPoly::y()));
    }
    return c.q_polys[static_cast<std::size_t>(n)];
}

/// s_v = P_{k_0} Q_{k_1} ... Q_{k_t}, homogeneous of degree |v|.
inline NcPoly s_poly(const FibWord& v) {
    auto ks = v.one_runs();
    NcPoly out = P_poly(static_cast<int>(ks[0]));
    for (std::size_t i = 1; i < ks.size(); ++i)
        out = nc_mul(out, Q_poly(static_cast<int>(ks[i])));
    return out;
}

/// p_v = (X^{k_0+2} - (k_0+2) X^{k_0} Y) ... (X^{k_{t-1}+2} - (k_{t-1}+2)
/// X^{k_{t-1}} Y) X^{k_t}.
inline NcPoly p_poly(const FibWord& v) {
    auto x_power = [](std::int64_t k) {
        std::vector<std::uint8_t> ds(static_cast<std::size_t>(k), 1);
        return FibWord(std::move(ds));
    };
    auto ks = v.one_runs();
    NcPoly out = NcPoly::one();
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        const std::int64_t k = ks[i];
        NcPoly factor = NcPoly::monomial(x_power(k + 2), 1);
        // X^k Y is the monomial h_{2 1^k}
        std::vector<std::uint8_t> ds(static_cast<std::size_t>(k), 1);
        ds.push_back(2);
        factor.add_term(FibWord(std::move(ds)), Rational(-(k + 2)));
        out = nc_mul(out, factor);
    }
    return nc_mul(out, NcPoly::monomial(x_power(ks.back()), 1));
}

namespace detail {

/// Coordinates of a homogeneous element over the h-monomial basis of R_n,
/// in canonical level order.
inline std::vector<Rational> h_coords(const NcPoly& f, int n) {
    const auto& lv = lattice::level(n);
    std::vector<Rational> out(lv.size(), Rational(0));
    for (const auto& [w, c] : f.terms()) {
        if (w.rank() != n) throw std::invalid_argument("h_coords: non-homogeneous element");
        out[lattice::level_index(w)] = c;
    }
    return out;
}

using Matrix = std::vector<std::vector<Rational>>;

/// Exact dense inverse by Gauss-Jordan elimination.
inline Matrix invert(Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("invert: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= factor * a[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

struct BasisTables {
    Matrix s_inv;  // h-coords -> s-coords
    Matrix p_inv;  // h-coords -> p-coords
};

struct ConversionCaches {
    std::mutex mu;
    std::map<int, BasisTables> by_degree;
    int cap = 12;
};

inline ConversionCaches& conversion_caches() {
    static ConversionCaches c;
    return c;
}

inline const BasisTables& basis_tables(int n) {
    auto& c = conversion_caches();
    std::lock_guard lk(c.mu);
    if (n > c.cap)
        throw std::domain_error("basis conversion: degree " + std::to_string(n) +
                                " exceeds cap " + std::to_string(c.cap));
    auto it = c.by_degree.find(n);
    if (it != c.by_degree.end()) return it->second;
    const auto& lv = lattice::level(n);
    const std::size_t m = lv.size();
    Matrix s_cols(m, std::vector<Rational>(m, Rational(0)));
    Matrix p_cols(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t j = 0; j < m; ++j) {
        const NcPoly sj = s_poly(lv[j]);
        for (const auto& [w, coef] : sj.terms()) s_cols[lattice::level_index(w)][j] = coef;
        const NcPoly pj = p_poly(lv[j]);
        for (const auto& [w, coef] : pj.terms()) p_cols[lattice::level_index(w)][j] = coef;
    }
    BasisTables t{invert(std::move(s_cols)), invert(std::move(p_cols))};
    return c.by_degree.emplace(n, std::move(t)).first->second;
}

inline std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) s += m[i][j] * v[j];
        out[i] = std::move(s);
    }
    return out;
}

}  // namespace detail

inline void set_conversion_cap(int cap) {
    std::lock_guard lk(detail::conversion_caches().mu);
    detail::conversion_caches().cap = cap;
}

/// Exact s-basis coordinates of a homogeneous element, as a level function.
inline lattice::LevelFn to_s_coords(const NcPoly& f) {
    auto deg = f.degree();
    if (!deg) throw std::invalid_argument("to_s_coords: element is zero or not homogeneous");
    const int n = static_cast<int>(*deg);
    const auto& t = detail::basis_tables(n);
    return lattice::LevelFn{n, detail::mat_vec(t.s_inv, detail::h_coords(f, n))};
}

/// Exact p-basis coordinates of a homogeneous element.
inline lattice::LevelFn to_p_coords(const NcPoly& f) {
    auto deg = f.degree();
    if (!deg) throw std::invalid_argument("to_p_coords: element is zero or not homogeneous");
    const int n = static_cast<int>(*deg);
    const auto& t = detail::basis_tables(n);
    return lattice::LevelFn{n, detail::mat_vec(t.p_inv, detail::h_coords(f, n))};
}

/// Pieri rule s_w X = sum of s_v over covers, plus the two p-basis facts
/// p_v X = p_{1v} and D(p_{2v}) = 0 (D acting through s-coordinates).
inline Report verify_pieri(int n_max) {
    Report rep("Pieri and p-basis properties");
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& w : lattice::level(n)) {
            NcPoly lhs = nc_mul(s_poly(w), NcPoly::x());
            NcPoly rhs;
            for (const auto& v : successors(w)) rhs += s_poly(v);
            rep.check(lhs == rhs, "Pieri fails at " + w.display());
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& v : lattice::level(n)) {
            rep.check(nc_mul(p_poly(v), NcPoly::x()) == p_poly(v.prepend_one()),
                      "p_v X != p_{1v} at " + v.display());
            std::vector<std::uint8_t> ds(v.digits().begin(), v.digits().end());
            ds.push_back(2);
            FibWord two_v{std::move(ds)};
            lattice::LevelFn coords = to_s_coords(p_poly(two_v));
            lattice::LevelFn dropped = lattice::apply_D(coords);
            bool all_zero = true;
            for (const auto& c : dropped.values)
                if (c != 0) all_zero = false;
            rep.check(all_zero, "D(p_{2v}) != 0 at v = " + v.display());
        }
    }
    return rep;
}

}  // namespace ncpoly
}  // namespace yf
