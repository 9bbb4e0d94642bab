#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yf/characters.hpp"
#include "yf/harmonic.hpp"
#include "yf/rational.hpp"
#include "yf/report.hpp"
#include "yf/stochastic.hpp"
#include "yf/summable.hpp"
#include "yf/value.hpp"
#include "yf/words.hpp"

namespace yf {
namespace boundary {

/// A point of the parameter space Omega: the Plancherel point P, or a pair
/// (beta, w) with beta in (0,1] and w summable.
struct OmegaPoint {
    bool is_plancherel = false;
    Rational beta{1};
    SummableWord w;

    static OmegaPoint plancherel() {
        OmegaPoint p;
        p.is_plancherel = true;
        return p;
    }
    static OmegaPoint pair(Rational beta, SummableWord word) {
        if (beta <= 0 || beta > 1)
            throw std::invalid_argument("OmegaPoint: beta must lie in (0,1]");
        OmegaPoint p;
        p.beta = std::move(beta);
        p.w = std::move(word);
        return p;
    }
};

/// The approximating words v^(n) = 2^{r_n} 1^{s_n} w_n whose type-I
/// functions converge to phi_{beta,w}: w_n is the rightmost n digits of w,
/// s_n = 2n+1-|w_n|, and r_n is 0 for beta = 1, n^2 for beta = 0, else the
/// nearest integer to n(1-beta^2)/beta^2.
inline FibWord approx_sequence(const Rational& beta, const SummableWord& w, std::int64_t n) {
    if (beta < 0 || beta > 1) throw std::invalid_argument("approx_sequence: beta in [0,1]");
    if (n < 0) throw std::invalid_argument("approx_sequence: n must be >= 0");
    FibWord wn = w.rightmost_digits(n);
    const std::int64_t sn = 2 * n + 1 - wn.rank();
    std::int64_t rn = 0;
    if (beta == 0) {
        rn = n * n;
    } else if (beta != 1) {
        const Rational x = Rational(n) * (1 - beta * beta) / (beta * beta);
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        const Rational half_up = x + Rational(1, 2);
        rn = static_cast<std::int64_t>(numerator(half_up) / denominator(half_up));
    }
    std::vector<std::uint8_t> ds(wn.digits().begin(), wn.digits().end());
    ds.insert(ds.end(), static_cast<std::size_t>(sn), 1);
    ds.insert(ds.end(), static_cast<std::size_t>(rn), 2);
    return FibWord(std::move(ds));
}

enum class LimitClass { plancherel, boundary_point, inconclusive };

inline const char* limit_class_name(LimitClass c) {
    switch (c) {
        case LimitClass::plancherel: return "tends-to-plancherel";
        case LimitClass::boundary_point: return "tends-to-boundary-point";
        case LimitClass::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Finite-stage regularity diagnosis of a word sequence. The digitwise
/// limit detection is a clearly-labelled heuristic: letter m counts as
/// stable when it is constant over the last ceil(N/4) observed terms.
struct RegularityReport {
    LimitClass klass = LimitClass::inconclusive;
    std::vector<double> pi_trajectory;
    std::string stable_prefix;  // rightmost digits detected as stable
    double beta_hat = 0.0;
    std::string notes;
};

inline RegularityReport regularity_diagnose(const std::vector<FibWord>& seq,
                                            double plancherel_threshold = 0.05) {
    if (seq.empty()) throw std::invalid_argument("regularity_diagnose: empty sequence");
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].rank() <= seq[i - 1].rank())
            throw std::invalid_argument("regularity_diagnose: ranks must increase");

    RegularityReport rep;
    rep.pi_trajectory.reserve(seq.size());
    for (const auto& w : seq) rep.pi_trajectory.push_back(to_double(pi_value(w)));

    const std::size_t window = (seq.size() + 3) / 4;
    const std::size_t from = seq.size() - window;
    std::vector<std::uint8_t> stable;
    for (std::size_t m = 0;; ++m) {
        if (seq[from].length() <= m) break;
        const std::uint8_t d = seq[from].digits()[m];
        bool same = true;
        for (std::size_t i = from + 1; i < seq.size(); ++i)
            if (seq[i].length() <= m || seq[i].digits()[m] != d) same = false;
        if (!same) break;
        stable.push_back(d);
    }
    FibWord prefix{stable};
    rep.stable_prefix = prefix.display();

    const double last_pi = rep.pi_trajectory.back();
    const double prefix_pi = to_double(pi_value(prefix));
    rep.beta_hat = prefix_pi > 0 ? last_pi / prefix_pi : 0.0;

    if (last_pi <= plancherel_threshold) {
        rep.klass = LimitClass::plancherel;
        std::ostringstream os;
        os << "pi(w_n) fell below " << plancherel_threshold;
        rep.notes = os.str();
    } else if (!stable.empty()) {
        rep.klass = LimitClass::boundary_point;
        rep.notes = "digitwise-stable prefix detected (heuristic window " +
                    std::to_string(window) + ")";
    }
    return rep;
}

struct ConvergenceReport {
    bool converged = false;
    bool inconclusive = false;
    std::string notes;
};

/// Numeric check of the Omega-topology predicates on a finite prefix of a
/// sequence: to P when beta or pi(w) falls below tol; to (beta,w) when the
/// words agree digitwise over the listed positions and beta*pi matches to
/// tol at the tail of the sequence.
inline ConvergenceReport omega_converges(const std::vector<OmegaPoint>& seq,
                                         const OmegaPoint& limit, double tol) {
    if (seq.empty()) throw std::invalid_argument("omega_converges: empty sequence");
    ConvergenceReport rep;
    const OmegaPoint& last = seq.back();
    if (limit.is_plancherel) {
        if (last.is_plancherel) {
            rep.converged = true;
            rep.notes = "sequence reached P";
            return rep;
        }
        const double beta = to_double(last.beta);
        const double pi = to_double(pi_value(last.w).lo);
        rep.converged = beta <= tol || pi <= tol;
        std::ostringstream os;
        os << "final beta = " << beta << ", final pi = " << pi;
        rep.notes = os.str();
        if (!rep.converged) rep.inconclusive = true;
        return rep;
    }
    if (last.is_plancherel) {
        rep.notes = "sequence sits at P but the limit is a (beta, w) pair";
        return rep;
    }
    // digitwise agreement over every position both words can attest
    const std::int64_t radius =
        std::min(last.w.last_listed_position(), limit.w.last_listed_position());
    bool digits_ok = true;
    for (auto p : limit.w.positions)
        if (p <= radius &&
            !std::count(last.w.positions.begin(), last.w.positions.end(), p))
            digits_ok = false;
    for (auto p : last.w.positions)
        if (p <= radius &&
            !std::count(limit.w.positions.begin(), limit.w.positions.end(), p))
            digits_ok = false;
    const double lhs = to_double(last.beta) * to_double(pi_value(last.w).lo);
    const double rhs = to_double(limit.beta) * to_double(pi_value(limit.w).lo);
    const bool mass_ok = std::abs(lhs - rhs) <= tol;
    rep.converged = digits_ok && mass_ok;
    std::ostringstream os;
    os << "digitwise " << (digits_ok ? "agrees" : "disagrees") << " to radius " << radius
       << "; |beta*pi - target| = " << std::abs(lhs - rhs);
    rep.notes = os.str();
    return rep;
}

struct RecoveredPoint {
    std::vector<std::int64_t> positions;
    Rational beta;
};

/// Inverts the value sequence v_k = phi_{beta,w}(p_{2 1^{k-2}}) =
/// beta^k pi_k(w), k = 2..k_max, back to the 2-position set and beta:
/// zeros give the positions >= 2, the sign at k = 2 decides position 1, and
/// beta comes out of an exact k-th root at any k off the position set.
inline RecoveredPoint recover_boundary_point(const std::vector<Rational>& values_from_k2) {
    if (values_from_k2.empty())
        throw std::invalid_argument("recover_boundary_point: need values from k = 2");
    std::vector<std::int64_t> positions;
    if (values_from_k2[0] < 0) positions.push_back(1);
    for (std::size_t i = 0; i < values_from_k2.size(); ++i)
        if (values_from_k2[i] == 0) positions.push_back(static_cast<std::int64_t>(i + 2));
    auto w = SummableWord::from_positions(positions);
    for (std::size_t i = 0; i < values_from_k2.size(); ++i) {
        const std::int64_t k = static_cast<std::int64_t>(i + 2);
        if (values_from_k2[i] == 0) continue;
        const Rational pik = pi_k_value(w, k).exact_value();
        auto [beta, exact] =
            rational_kth_root(values_from_k2[i] / pik, static_cast<unsigned>(k));
        if (!exact)
            throw std::invalid_argument(
                "recover_boundary_point: beta^k is not an exact rational power at k = " +
                std::to_string(k));
        return RecoveredPoint{std::move(positions), beta};
    }
    throw std::invalid_argument("recover_boundary_point: all values vanish");
}

namespace detail {

inline FibWord random_word(stochastic::SplitMix64& rng, int max_digits) {
    const auto len = static_cast<std::size_t>(rng.next() % static_cast<std::uint64_t>(
                                                               std::max(1, max_digits)));
    std::vector<std::uint8_t> ds;
    ds.reserve(len);
    for (std::size_t i = 0; i < len; ++i) ds.push_back(rng.next() % 2 ? 2 : 1);
    return FibWord(std::move(ds));
}

/// Random canonical p-label suffix: a 2 at the left end, essential rank
/// between 2 and roughly max_digits+2.
inline harmonic::PWordLabel random_plabel(stochastic::SplitMix64& rng, int max_digits) {
    FibWord body = random_word(rng, max_digits);
    std::vector<std::uint8_t> ds(body.digits().begin(), body.digits().end());
    ds.push_back(2);
    return harmonic::PWordLabel{FibWord(std::move(ds))};
}

}  // namespace detail

/// Seeded fuzzing of the elementary inequalities (8.1)-(8.3) and of the
/// character bounds of Lemmas 8.2-8.4, all in exact arithmetic.
inline Report verify_inequalities(long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_inequalities: trials >= 1");
    Report rep("inequalities (8.1)-(8.3) and Lemmas 8.2-8.4");
    for (long t = 0; t < trials; ++t) {
        auto rng = stochastic::SplitMix64::substream(seed, static_cast<std::uint64_t>(t));
        {
            // (8.1): (1 - k/d) <= (1 - 1/d)^k for d >= 2, k >= 1
            const std::int64_t d = 2 + static_cast<std::int64_t>(rng.next() % 1999);
            const std::int64_t k = 1 + static_cast<std::int64_t>(rng.next() % 12);
            const Rational lhs = 1 - Rational(k, d);
            const Rational rhs = pow_rational(1 - Rational(1, d), k);
            rep.check(lhs <= rhs, "(8.1) fails at d=" + std::to_string(d) +
                                      ", k=" + std::to_string(k));
        }
        {
            // (8.2)/(8.3) for d > k
            const std::int64_t k = 1 + static_cast<std::int64_t>(rng.next() % 12);
            const std::int64_t d = k + 1 + static_cast<std::int64_t>(rng.next() % 2000);
            const Rational one_minus = 1 - Rational(1, d);
            const Rational lhs82 = pow_rational(one_minus, k * k);
            const Rational mid = 1 - Rational(k, d);
            rep.check(lhs82 <= mid, "(8.2) fails at d=" + std::to_string(d) +
                                        ", k=" + std::to_string(k));
            const Rational ratio = pow_rational(one_minus, k) / mid;
            const Rational bound = 1 + Rational(binomial(k, 2)) / Rational((d - k) * (d - k));
            rep.check(1 <= ratio && ratio <= bound,
                      "(8.3) fails at d=" + std::to_string(d) + ", k=" + std::to_string(k));
        }
        {
            // Lemma 8.2: |psi_v(p_u)| <= |pi_k(v)| with k = ||u||
            FibWord v = detail::random_word(rng, 28);
            auto u = detail::random_plabel(rng, 9);
            const std::int64_t k = u.essential_rank();
            const Rational psi = characters::grouped_character_ratio(u.two_positions(),
                                                                     v.two_positions());
            const Rational pik = pi_k_value(v, k);
            rep.check(boost::multiprecision::abs(psi) <= boost::multiprecision::abs(pik),
                      "Lemma 8.2 fails at v=" + v.display() + ", u0=" + u.display());
        }
        {
            // Lemma 8.3: |pi_k(v)| <= (k pi(v))^k
            FibWord v = detail::random_word(rng, 28);
            const std::int64_t k = 2 + static_cast<std::int64_t>(rng.next() % 9);
            const Rational lhs = boost::multiprecision::abs(pi_k_value(v, k));
            const Rational rhs = pow_rational(Rational(k) * pi_value(v), k);
            rep.check(lhs <= rhs, "Lemma 8.3 fails at v=" + v.display() +
                                      ", k=" + std::to_string(k));
        }
        {
            // Lemma 8.4: |pi_2| >= pi^4 unless d_1 = 2, then |pi_3| >= pi^9
            FibWord v = detail::random_word(rng, 28);
            auto ps = v.two_positions();
            const Rational pi = pi_value(v);
            if (!ps.empty() && ps.front() == 2) {
                rep.check(boost::multiprecision::abs(pi_k_value(v, 3)) >=
                              pow_rational(pi, 9),
                          "Lemma 8.4 (d1=2) fails at v=" + v.display());
            } else {
                rep.check(boost::multiprecision::abs(pi_k_value(v, 2)) >=
                              pow_rational(pi, 4),
                          "Lemma 8.4 (d1!=2) fails at v=" + v.display());
            }
        }
    }
    return rep;
}

}  // namespace boundary
}  // namespace yf
