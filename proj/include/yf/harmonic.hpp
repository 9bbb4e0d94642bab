#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yf/characters.hpp"
#include "yf/lattice.hpp"
#include "yf/rational.hpp"
#include "yf/report.hpp"
#include "yf/summable.hpp"
#include "yf/value.hpp"
#include "yf/words.hpp"

namespace yf {
namespace harmonic {

/// Label for a p-basis element of R_infty: the class of p_u for u in
/// 1^infty YF, kept as the canonical finite suffix u0 (empty, or led by a
/// 2). The essential rank |u0| drives the beta-scaling law.
struct PWordLabel {
    FibWord suffix;

    static PWordLabel from_word(const FibWord& u) {
        std::vector<std::uint8_t> ds(u.digits().begin(), u.digits().end());
        while (!ds.empty() && ds.back() == 1) ds.pop_back();  // strip leading 1's
        return PWordLabel{FibWord(std::move(ds))};
    }

    static PWordLabel parse(const std::string& text) {
        return from_word(FibWord::parse(text));
    }

    std::int64_t essential_rank() const { return suffix.rank(); }
    std::vector<std::int64_t> two_positions() const { return suffix.two_positions(); }
    std::string display() const { return suffix.display(); }
};

enum class Kind { plancherel, type1, summable, contracted, mixture };

/// A normalized non-negative harmonic function, evaluated exactly where the
/// theory gives exact values and by certified enclosures otherwise. Values
/// of the associated linear functional on p-basis labels come from the
/// product formula; word values identify phi(v) with the functional at s_v.
class HarmonicFn {
    struct Impl;
    using ImplPtr = std::shared_ptr<const Impl>;

    struct Impl {
        Kind kind = Kind::plancherel;
        FibWord w;                  // type1
        boundary::SummableWord sw;  // summable
        ImplPtr base;               // contracted
        Rational tau;
        std::vector<std::pair<Rational, ImplPtr>> parts;  // mixture

        mutable std::mutex mu;
        mutable std::map<int, std::vector<Value>> level_cache;
    };

  public:
    static HarmonicFn plancherel() {
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::plancherel;
        return HarmonicFn(std::move(impl));
    }

    /// psi_w: normalized path counts into the tail (w, 1w, 11w, ...).
    static HarmonicFn type1(FibWord w) {
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::type1;
        impl->w = std::move(w);
        return HarmonicFn(std::move(impl));
    }

    /// phi_w for a summable infinite word.
    static HarmonicFn summable(boundary::SummableWord w) {
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::summable;
        impl->sw = std::move(w);
        return HarmonicFn(std::move(impl));
    }

    static HarmonicFn contracted(const HarmonicFn& base, const Rational& tau) {
        if (tau < 0 || tau > 1)
            throw std::invalid_argument("contract: tau must lie in [0,1]");
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::contracted;
        impl->base = base.impl_;
        impl->tau = tau;
        return HarmonicFn(std::move(impl));
    }

    static HarmonicFn mixture(const std::vector<std::pair<Rational, HarmonicFn>>& parts) {
        Rational total = 0;
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::mixture;
        for (const auto& [weight, phi] : parts) {
            if (weight < 0) throw std::invalid_argument("mixture: negative weight");
            total += weight;
            impl->parts.emplace_back(weight, phi.impl_);
        }
        if (total != 1) throw std::invalid_argument("mixture: weights must sum to 1");
        return HarmonicFn(std::move(impl));
    }

    Kind kind() const { return impl_->kind; }

    std::string describe() const { return describe(impl_); }

    /// phi(v), through the evaluator natural to the kind.
    Value eval(const FibWord& v) const {
        return eval_level(static_cast<int>(v.rank()))[lattice::level_index(v)];
    }

    /// phi on the whole level n, in canonical order (cached).
    std::vector<Value> eval_level(int n) const { return eval_level(impl_, n); }

    /// phi(p_u) by the product formula / scaling laws.
    Value eval_p(const PWordLabel& u) const { return eval_p(impl_, u); }

    /// phi(p_{1^lift u0}) evaluated through s-expansion: sum over level
    /// words of X_u^v phi(v). Independent route used for cross-checks.
    Value eval_p_via_words(const PWordLabel& u, int lift = 0) const {
        std::vector<std::uint8_t> ds(u.suffix.digits().begin(), u.suffix.digits().end());
        for (int i = 0; i < lift; ++i) ds.push_back(1);
        FibWord lifted{std::move(ds)};
        const int n = static_cast<int>(lifted.rank());
        const auto& lv = lattice::level(n);
        auto vals = eval_level(n);
        Value out{Rational(0)};
        for (std::size_t i = 0; i < lv.size(); ++i) {
            Rational x = characters::char_product(lifted, lv[i]);
            if (x != 0) out += x * vals[i];
        }
        return out;
    }

    /// True when word evaluation yields exact rationals on every level.
    bool exact() const { return exact(impl_); }

  private:
    explicit HarmonicFn(ImplPtr impl) : impl_(std::move(impl)) {}

    static bool exact(const ImplPtr& impl) {
        switch (impl->kind) {
            case Kind::plancherel: return true;
            case Kind::type1: return true;
            case Kind::summable: return impl->sw.finitary;
            case Kind::contracted: return exact(impl->base);
            case Kind::mixture: {
                for (const auto& [wt, part] : impl->parts)
                    if (!exact(part)) return false;
                return true;
            }
        }
        return false;
    }

    static std::string describe(const ImplPtr& impl) {
        switch (impl->kind) {
            case Kind::plancherel: return "plancherel";
            case Kind::type1: return "type1(" + impl->w.display() + ")";
            case Kind::summable: return "summable(" + impl->sw.spec_string() + ")";
            case Kind::contracted:
                return "contract(" + rational_to_string(impl->tau) + ", " +
                       describe(impl->base) + ")";
            case Kind::mixture: {
                std::ostringstream os;
                os << "mixture(";
                bool first = true;
                for (const auto& [wt, part] : impl->parts) {
                    if (!first) os << ", ";
                    first = false;
                    os << rational_to_string(wt) << "*" << describe(part);
                }
                os << ")";
                return os.str();
            }
        }
        return "?";
    }

    static std::vector<Value> eval_level(const ImplPtr& impl, int n) {
        {
            std::lock_guard lk(impl->mu);
            auto it = impl->level_cache.find(n);
            if (it != impl->level_cache.end()) return it->second;
        }
        std::vector<Value> vals = compute_level(impl, n);
        std::lock_guard lk(impl->mu);
        return impl->level_cache.emplace(n, std::move(vals)).first->second;
    }

    static std::vector<Value> compute_level(const ImplPtr& impl, int n) {
        const auto& lv = lattice::level(n);
        std::vector<Value> vals;
        vals.reserve(lv.size());
        switch (impl->kind) {
            case Kind::plancherel: {
                const Int nf = factorial(n);
                for (const auto& v : lv) vals.emplace_back(Rational(dim_product(v), nf));
                return vals;
            }
            case Kind::type1: {
                // psi_w(v) = d(v, 1^K w)/d(w); the numerator stabilizes as
                // soon as the tail word outranks v
                const std::int64_t k = std::max<std::int64_t>(0, n - impl->w.rank());
                std::vector<std::uint8_t> ds(impl->w.digits().begin(),
                                             impl->w.digits().end());
                for (std::int64_t i = 0; i < k; ++i) ds.push_back(1);
                FibWord target{std::move(ds)};
                auto table = lattice::paths_to(target);
                const Int denom = dim_product(impl->w);
                for (std::size_t i = 0; i < lv.size(); ++i)
                    vals.emplace_back(Rational(table[n][i], denom));
                return vals;
            }
            case Kind::summable: {
                // through the inverse transition: phi(s_v) =
                // sum_u X_u^v phi(p_u) / z(u)
                std::vector<Value> coef;
                coef.reserve(lv.size());
                for (const auto& u : lv) {
                    Value pu = eval_p(impl, PWordLabel::from_word(u));
                    coef.push_back(pu * Rational(1, z_value(u)));
                }
                const auto& table = characters::char_table(n);
                for (std::size_t j = 0; j < lv.size(); ++j) {
                    Value s{Rational(0)};
                    for (std::size_t i = 0; i < lv.size(); ++i)
                        if (table[i][j] != 0) s += table[i][j] * coef[i];
                    vals.push_back(s);
                }
                return vals;
            }
            case Kind::contracted: {
                // direct (4.4): sum_k tau^k (1-tau)^{n-k}/(n-k)! S_k(v)
                std::vector<std::vector<Rational>> base_levels;
                base_levels.reserve(static_cast<std::size_t>(n) + 1);
                for (int m = 0; m <= n; ++m) {
                    auto bv = eval_level(impl->base, m);
                    std::vector<Rational> exact_row;
                    exact_row.reserve(bv.size());
                    for (const auto& x : bv) {
                        if (!x.is_exact())
                            throw std::invalid_argument(
                                "contract: base not exactly evaluable to level " +
                                std::to_string(n));
                        exact_row.push_back(x.lo);
                    }
                    base_levels.push_back(std::move(exact_row));
                }
                std::vector<Rational> acc(lv.size(), Rational(0));
                for (int k = 0; k <= n; ++k) {
                    std::vector<Rational> s = base_levels[k];  // S_k on level k
                    for (int m = k; m < n; ++m) {
                        const auto& up = lattice::level(m + 1);
                        std::vector<Rational> next(up.size(), Rational(0));
                        for (std::size_t i = 0; i < up.size(); ++i) {
                            Rational t = 0;
                            for (const auto& x : predecessors(up[i]))
                                t += s[lattice::level_index(x)];
                            next[i] = std::move(t);
                        }
                        s = std::move(next);
                    }
                    const Rational weight = pow_rational(impl->tau, k) *
                                            pow_rational(1 - impl->tau, n - k) /
                                            Rational(factorial(n - k));
                    if (weight == 0) continue;
                    for (std::size_t i = 0; i < lv.size(); ++i) acc[i] += weight * s[i];
                }
                for (auto& x : acc) vals.emplace_back(std::move(x));
                return vals;
            }
            case Kind::mixture: {
                vals.assign(lv.size(), Value(Rational(0)));
                for (const auto& [wt, part] : impl->parts) {
                    auto pv = eval_level(part, n);
                    for (std::size_t i = 0; i < lv.size(); ++i) vals[i] += wt * pv[i];
                }
                return vals;
            }
        }
        throw std::logic_error("compute_level: unreachable");
    }

    static Value eval_p(const ImplPtr& impl, const PWordLabel& u) {
        switch (impl->kind) {
            case Kind::plancherel:
                return Value(Rational(u.suffix.empty() ? 1 : 0));
            case Kind::type1: {
                const auto deltas = u.two_positions();
                const auto ds = impl->w.two_positions();
                return Value(characters::grouped_character_ratio(deltas, ds));
            }
            case Kind::summable: {
                if (u.suffix.empty()) return Value(Rational(1));
                const auto deltas = u.two_positions();
                Value prefix{
                    characters::grouped_character_ratio(deltas, impl->sw.positions)};
                return prefix * boundary::certified_tail_product(impl->sw,
                                                                 u.essential_rank());
            }
            case Kind::contracted:
                return pow_rational(impl->tau, u.essential_rank()) * eval_p(impl->base, u);
            case Kind::mixture: {
                Value out{Rational(0)};
                for (const auto& [wt, part] : impl->parts) out += wt * eval_p(part, u);
                return out;
            }
        }
        throw std::logic_error("eval_p: unreachable");
    }

    ImplPtr impl_;
};

inline HarmonicFn phi_plancherel() { return HarmonicFn::plancherel(); }
inline HarmonicFn psi_type1(const FibWord& w) { return HarmonicFn::type1(w); }
inline HarmonicFn phi_summable(const boundary::SummableWord& w) {
    return HarmonicFn::summable(w);
}
inline HarmonicFn contract(const HarmonicFn& phi, const Rational& tau) {
    return HarmonicFn::contracted(phi, tau);
}
inline HarmonicFn mixture(const std::vector<std::pair<Rational, HarmonicFn>>& parts) {
    return HarmonicFn::mixture(parts);
}

/// phi on level n through the p-route alone: phi(s_v) =
/// sum_u X_u^v phi(p_u) / z(u). Independent of the kind's native word
/// evaluator; the contraction laws are cross-checked against it.
inline std::vector<Value> eval_level_via_p(const HarmonicFn& phi, int n) {
    const auto& lv = lattice::level(n);
    const auto& table = characters::char_table(n);
    std::vector<Value> coef;
    coef.reserve(lv.size());
    for (const auto& u : lv)
        coef.push_back(phi.eval_p(PWordLabel::from_word(u)) * Rational(1, z_value(u)));
    std::vector<Value> vals;
    vals.reserve(lv.size());
    for (std::size_t j = 0; j < lv.size(); ++j) {
        Value s{Rational(0)};
        for (std::size_t i = 0; i < lv.size(); ++i)
            if (table[i][j] != 0) s += table[i][j] * coef[i];
        vals.push_back(s);
    }
    return vals;
}

/// phi(e) = 1, the mean-value balance phi(v) = sum over covers, and
/// non-negativity, exactly on levels 0..n_max (containment for intervals).
inline Report check_harmonic(const HarmonicFn& phi, int n_max) {
    Report rep("harmonicity of " + phi.describe());
    auto at0 = phi.eval_level(0);
    rep.check(at0[0].contains(Rational(1)) && (!at0[0].is_exact() || at0[0].lo == 1),
              "phi(e) != 1");
    for (int n = 0; n <= n_max; ++n) {
        const auto& lv = lattice::level(n);
        auto cur = phi.eval_level(n);
        auto up = phi.eval_level(n + 1);
        for (std::size_t i = 0; i < lv.size(); ++i) {
            Value balance = cur[i];
            for (const auto& w : successors(lv[i]))
                balance = balance - up[lattice::level_index(w)];
            const bool balanced =
                balance.is_exact() ? balance.lo == 0 : balance.contains_zero();
            rep.check(balanced, "balance fails at " + lv[i].display());
            const bool nonneg = cur[i].is_exact() ? cur[i].lo >= 0 : cur[i].hi >= 0;
            rep.check(nonneg, "negative value at " + lv[i].display());
        }
    }
    return rep;
}

/// Level distribution M_n(v) = d(v) phi(v) of the central measure.
inline lattice::LevelFn central_measure(const HarmonicFn& phi, int n) {
    const auto& lv = lattice::level(n);
    auto vals = phi.eval_level(n);
    lattice::LevelFn out{n, {}};
    out.values.reserve(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i)
        out.values.push_back(Rational(dim_product(lv[i])) * vals[i].exact_value());
    return out;
}

}  // namespace harmonic
}  // namespace yf
