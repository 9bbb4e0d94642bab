#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "yf/harmonic.hpp"
#include "yf/lattice.hpp"
#include "yf/rational.hpp"
#include "yf/words.hpp"

namespace yf {
namespace stochastic {

/// SplitMix64: the walk sampler's only entropy source. 64-bit seed, fixed
/// constants, no platform dependence; per-sample substreams are derived by
/// hashing (seed, sample index), so parallel and serial fills agree.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed);
        std::uint64_t a = g.next();
        SplitMix64 h(index ^ 0xD1B54A32D192ED03ULL);
        return SplitMix64(a ^ h.next());
    }

  private:
    std::uint64_t state_;
};

/// One 128-bit uniform draw as an exact integer in [0, 2^128).
inline Int draw_u128(SplitMix64& rng) {
    Int hi = rng.next();
    Int lo = rng.next();
    return (hi << 64) | lo;
}

/// Index sampled from exact rational weights (assumed to sum to 1) by a
/// cumulative scan against one 128-bit draw: i is chosen when
/// draw/2^128 falls inside its cumulative slot.
inline std::size_t sample_index(const std::vector<Rational>& probs, SplitMix64& rng) {
    static const Int two128 = Int(1) << 128;
    const Int draw = draw_u128(rng);
    Rational cum = 0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
        cum += probs[i];
        if (draw * boost::multiprecision::denominator(cum) <
            boost::multiprecision::numerator(cum) * two128)
            return i;
    }
    return probs.empty() ? 0 : probs.size() - 1;
}

/// Plancherel transition law out of v: p_{v,w} = d(w) / ((n+1) d(v)).
inline std::vector<std::pair<FibWord, Rational>> plancherel_step(const FibWord& v) {
    const Int dv = dim_product(v);
    const Int denom = dv * (v.rank() + 1);
    std::vector<std::pair<FibWord, Rational>> out;
    for (const auto& w : successors(v)) out.emplace_back(w, Rational(dim_product(w), denom));
    return out;
}

/// Probability that the Plancherel walk from u ever visits v:
/// p(u,v) = (k!/n!) d(u,v) d(v) / d(u).
inline Rational hit_probability(const FibWord& u, const FibWord& v) {
    if (u.rank() > v.rank()) throw std::invalid_argument("hit_probability: rank order");
    const Rational r = Rational(factorial(u.rank()), factorial(v.rank()));
    return r * Rational(lattice::path_count(u, v) * dim_product(v), dim_product(u));
}

enum class WalkKind { plancherel, mixed };

struct WalkConfig {
    FibWord start;  // plancherel walks start here; mixed walks start at e
    int target_level = 0;
    long samples = 1;
    std::uint64_t seed = 0;
    WalkKind kind = WalkKind::plancherel;
    Rational tau{0};
    std::shared_ptr<const harmonic::HarmonicFn> base;  // mixed kind only

    void validate() const {
        if (samples < 1) throw std::invalid_argument("WalkConfig: samples must be >= 1");
        if (target_level < start.rank())
            throw std::invalid_argument("WalkConfig: target level below start rank");
        if (kind == WalkKind::mixed && !base)
            throw std::invalid_argument("WalkConfig: mixed walk needs a base function");
    }
};

struct EmpiricalDist {
    int level = 0;
    long total = 0;
    std::map<FibWord, long> counts;

    Rational frequency(const FibWord& w) const {
        auto it = counts.find(w);
        return Rational(it == counts.end() ? 0 : it->second, total);
    }
};

namespace detail {

inline FibWord walk_up(FibWord v, int target, SplitMix64& rng) {
    while (v.rank() < target) {
        auto step = plancherel_step(v);
        std::vector<Rational> probs;
        probs.reserve(step.size());
        for (const auto& [w, p] : step) probs.push_back(p);
        v = step[sample_index(probs, rng)].first;
    }
    return v;
}

}  // namespace detail

/// Seeded Monte Carlo for the Plancherel growth process and the binomial
/// mixing procedure. Identical seeds give identical histograms.
inline EmpiricalDist sample_walk(const WalkConfig& cfg) {
    cfg.validate();
    EmpiricalDist dist;
    dist.level = cfg.target_level;
    dist.total = cfg.samples;

    std::vector<Rational> binom;
    std::vector<std::vector<Rational>> level_laws;  // M_k^phi per k, mixed kind
    if (cfg.kind == WalkKind::mixed) {
        const int n = cfg.target_level;
        binom.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            binom.push_back(Rational(binomial(n, k)) * pow_rational(cfg.tau, k) *
                            pow_rational(1 - cfg.tau, n - k));
        level_laws.resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            level_laws[k] = harmonic::central_measure(*cfg.base, k).values;
    }

    for (long s = 0; s < cfg.samples; ++s) {
        auto rng = SplitMix64::substream(cfg.seed, static_cast<std::uint64_t>(s));
        FibWord v;
        if (cfg.kind == WalkKind::plancherel) {
            v = detail::walk_up(cfg.start, cfg.target_level, rng);
        } else {
            const std::size_t k = sample_index(binom, rng);
            const auto& lv = lattice::level(static_cast<int>(k));
            v = detail::walk_up(lv[sample_index(level_laws[k], rng)], cfg.target_level,
                                rng);
        }
        ++dist.counts[v];
    }
    return dist;
}

/// Exact law of the mixed procedure, M_n(v) = d(v) C_tau(phi)(v).
inline lattice::LevelFn exact_mixed_dist(const Rational& tau, const harmonic::HarmonicFn& phi,
                                         int n) {
    return harmonic::central_measure(harmonic::contract(phi, tau), n);
}

/// Total-variation distance between an empirical histogram and an exact
/// level law, as an exact rational.
inline Rational tv_distance(const EmpiricalDist& emp, const lattice::LevelFn& exact) {
    if (emp.level != exact.level) throw std::invalid_argument("tv_distance: level mismatch");
    const auto& lv = lattice::level(exact.level);
    Rational s = 0;
    for (std::size_t i = 0; i < lv.size(); ++i) {
        Rational diff = emp.frequency(lv[i]) - exact.values[i];
        s += diff < 0 ? -diff : diff;
    }
    return s / 2;
}

}  // namespace stochastic
}  // namespace yf
