// Command-line surface for the Young-Fibonacci engine: lattice listings,
// character matrices, harmonic-function evaluation, seeded walk sampling,
// convergence experiments, and the verification suites.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 bad input.

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yf/boundary.hpp"
#include "yf/io.hpp"
#include "yf/ncpoly.hpp"

using namespace yf;

namespace {

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "expected text, json or csv");
}

harmonic::HarmonicFn parse_harmonic_spec(const std::string& spec) {
    if (spec == "plancherel") return harmonic::phi_plancherel();
    if (spec.rfind("type1:", 0) == 0)
        return harmonic::psi_type1(FibWord::parse(spec.substr(6)));
    if (spec.rfind("summable:", 0) == 0)
        return harmonic::phi_summable(boundary::SummableWord::parse(spec.substr(9)));
    throw std::invalid_argument("harmonic spec must be plancherel, type1:WORD or "
                                "summable:positions=...");
}

int run_level(int n, Format fmt) {
    const auto& lv = lattice::level(n);
    if (fmt == Format::json) {
        std::cout << io::level_json(n).dump(2) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "word,dim\n";
        for (const auto& w : lv)
            std::cout << w.display() << "," << dim_product(w) << "\n";
    } else {
        for (const auto& w : lv) std::cout << w.display() << "\n";
    }
    return 0;
}

int run_cover(const std::string& word, Format fmt) {
    auto v = FibWord::parse(word);
    auto succ = successors(v);
    auto pred = predecessors(v);
    if (fmt == Format::json) {
        io::json j;
        j["schema_version"] = io::schema_version;
        j["word"] = v.display();
        j["rank"] = v.rank();
        io::json s = io::json::array(), p = io::json::array();
        for (const auto& w : succ) s.push_back(w.display());
        for (const auto& w : pred) p.push_back(w.display());
        j["successors"] = s;
        j["predecessors"] = p;
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "relation,word\n";
        for (const auto& w : succ) std::cout << "successor," << w.display() << "\n";
        for (const auto& w : pred) std::cout << "predecessor," << w.display() << "\n";
    } else {
        std::cout << "word " << v.display() << " (rank " << v.rank() << ")\n";
        std::cout << "successors (" << succ.size() << "):";
        for (const auto& w : succ) std::cout << " " << w.display();
        std::cout << "\npredecessors (" << pred.size() << "):";
        for (const auto& w : pred) std::cout << " " << w.display();
        std::cout << "\n";
    }
    return 0;
}

int run_dim(const std::string& from, const std::string& to, Format fmt) {
    auto u = FibWord::parse(from);
    auto v = FibWord::parse(to);
    auto k = lattice::martin_kernel(u, v);
    if (fmt == Format::json) {
        io::json j;
        j["schema_version"] = io::schema_version;
        j["from"] = u.display();
        j["to"] = v.display();
        j["paths"] = k.paths.str();
        j["dim_to"] = k.dimension.str();
        j["martin_kernel"] = rational_to_string(k.value);
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "from,to,paths,dim_to,martin_kernel\n"
                  << u.display() << "," << v.display() << "," << k.paths << ","
                  << k.dimension << "," << rational_to_string(k.value) << "\n";
    } else {
        std::cout << "d(" << u.display() << ", " << v.display() << ") = " << k.paths
                  << "\n";
        std::cout << "d(" << v.display() << ") = " << k.dimension << "\n";
        std::cout << "K = " << rational_to_string(k.value) << "\n";
    }
    return 0;
}

int run_chars(int n, const std::string& method, bool check, Format fmt) {
    auto cm = characters::char_matrix(n, characters::parse_method(method));
    if (fmt == Format::json) {
        std::cout << io::char_matrix_json(cm).dump(2) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << io::char_matrix_csv(cm);
    } else {
        for (std::size_t i = 0; i < cm.order.size(); ++i) {
            std::cout << cm.order[i].display() << ":";
            for (const auto& x : cm.rows[i]) std::cout << " " << rational_to_string(x);
            std::cout << "\n";
        }
    }
    if (check) {
        auto agree = characters::verify_char_agreement(n);
        auto inv = characters::verify_inverse(n);
        std::cerr << agree.summary() << "\n" << inv.summary() << "\n";
        if (!agree.ok() || !inv.ok()) return 1;
    }
    return 0;
}

int run_harmonic_eval(const std::string& kind, const std::string& word,
                      const std::string& positions, const std::string& tau, int level,
                      const std::vector<std::string>& plabels, Format fmt) {
    harmonic::HarmonicFn phi = [&] {
        if (kind == "plancherel") return harmonic::phi_plancherel();
        if (kind == "type1") return harmonic::psi_type1(FibWord::parse(word));
        if (kind == "summable")
            return harmonic::phi_summable(boundary::SummableWord::parse(positions));
        throw std::invalid_argument("--kind must be plancherel, type1 or summable");
    }();
    if (!tau.empty()) phi = harmonic::contract(phi, parse_rational(tau));

    if (fmt == Format::json) {
        auto j = io::harmonic_values_json(phi, level);
        if (!plabels.empty()) {
            io::json p;
            for (const auto& s : plabels)
                p[s] = io::value_json(phi.eval_p(harmonic::PWordLabel::parse(s)));
            j["p_values"] = p;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    const auto& lv = lattice::level(level);
    auto vals = phi.eval_level(level);
    if (fmt == Format::csv) {
        std::cout << "word,value,central_measure\n";
        for (std::size_t i = 0; i < lv.size(); ++i) {
            std::cout << lv[i].display() << "," << decimal_string(vals[i].lo, 12);
            if (vals[i].is_exact())
                std::cout << ","
                          << decimal_string(Rational(dim_product(lv[i])) * vals[i].lo, 12);
            else
                std::cout << ",";
            std::cout << "\n";
        }
    } else {
        std::cout << phi.describe() << " on level " << level << "\n";
        for (std::size_t i = 0; i < lv.size(); ++i)
            std::cout << "  " << lv[i].display() << " = " << value_to_string(vals[i])
                      << "\n";
        for (const auto& s : plabels)
            std::cout << "  p[" << s << "] = "
                      << value_to_string(phi.eval_p(harmonic::PWordLabel::parse(s)))
                      << "\n";
    }
    return 0;
}

int run_walk(const std::string& kind, const std::string& tau, const std::string& base,
             const std::string& start, int level, long samples, std::uint64_t seed,
             Format fmt) {
    stochastic::WalkConfig cfg;
    cfg.start = FibWord::parse(start);
    cfg.target_level = level;
    cfg.samples = samples;
    cfg.seed = seed;
    harmonic::HarmonicFn exact_base = harmonic::phi_plancherel();
    if (kind == "plancherel") {
        cfg.kind = stochastic::WalkKind::plancherel;
    } else if (kind == "mixed") {
        cfg.kind = stochastic::WalkKind::mixed;
        cfg.tau = parse_rational(tau.empty() ? "1/2" : tau);
        exact_base = parse_harmonic_spec(base.empty() ? "plancherel" : base);
        cfg.base = std::make_shared<harmonic::HarmonicFn>(exact_base);
    } else {
        throw std::invalid_argument("--kind must be plancherel or mixed");
    }
    auto emp = stochastic::sample_walk(cfg);
    lattice::LevelFn exact =
        cfg.kind == stochastic::WalkKind::plancherel
            ? [&] {
                  // exact law of the walk from `start`: the hitting distribution
                  lattice::LevelFn out{level, {}};
                  for (const auto& v : lattice::level(level))
                      out.values.push_back(stochastic::hit_probability(cfg.start, v));
                  return out;
              }()
            : stochastic::exact_mixed_dist(cfg.tau, exact_base, level);
    if (fmt == Format::json) {
        io::json j;
        j["schema_version"] = io::schema_version;
        j["kind"] = kind;
        j["level"] = level;
        j["samples"] = samples;
        j["seed"] = seed;
        io::json rows = io::json::array();
        const auto& lv = lattice::level(level);
        for (std::size_t i = 0; i < lv.size(); ++i) {
            io::json r;
            r["word"] = lv[i].display();
            auto it = emp.counts.find(lv[i]);
            r["count"] = it == emp.counts.end() ? 0 : it->second;
            r["exact_probability"] = rational_to_string(exact.values[i]);
            rows.push_back(r);
        }
        j["rows"] = rows;
        j["tv_distance"] = decimal_string(stochastic::tv_distance(emp, exact), 9);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << io::empirical_csv(emp, exact);
        if (fmt == Format::text)
            std::cout << "tv_distance,"
                      << decimal_string(stochastic::tv_distance(emp, exact), 9) << "\n";
    }
    return 0;
}

int run_converge(const std::string& mode, const std::string& beta_s,
                 const std::string& word_spec, const std::string& label_s,
                 std::int64_t nmax, int points) {
    std::cout << "n,pi_wn,beta_hat,psi_value,target,abs_error\n";
    if (points < 1) points = 1;
    if (mode == "approx") {
        const Rational beta = parse_rational(beta_s);
        auto w = boundary::SummableWord::parse(word_spec);
        auto label = harmonic::PWordLabel::parse(label_s);
        auto phiw = harmonic::phi_summable(w);
        const Rational target = pow_rational(beta, label.essential_rank()) *
                                phiw.eval_p(label).exact_value();
        const Rational pi_w = boundary::pi_value(w).exact_value();
        for (int i = 1; i <= points; ++i) {
            const std::int64_t n = std::max<std::int64_t>(1, nmax * i / points);
            auto vn = boundary::approx_sequence(beta, w, n);
            const Rational pin = boundary::pi_value(vn);
            const Rational psi = characters::grouped_character_ratio(
                label.two_positions(), vn.two_positions());
            const Rational err0 = psi - target;
            std::cout << n << "," << decimal_string(pin, 9) << ","
                      << decimal_string(pi_w == 0 ? Rational(0) : pin / pi_w, 9) << ","
                      << decimal_string(psi, 9) << "," << decimal_string(target, 9)
                      << "," << decimal_string(err0 < 0 ? -err0 : err0, 9) << "\n";
        }
        return 0;
    }
    if (mode == "plancherel") {
        // the non-summable family with 2's at positions 2, 4, 6, ...
        for (int i = 1; i <= points; ++i) {
            const std::int64_t n = std::max<std::int64_t>(3, nmax * i / points);
            const std::int64_t m = (n - 1) / 2;
            std::vector<std::uint8_t> ds;
            ds.insert(ds.end(), 1, 1);
            ds.insert(ds.end(), static_cast<std::size_t>(m), 2);
            ds.insert(ds.end(), static_cast<std::size_t>(n - 2 * m - 1), 1);
            FibWord wn{std::move(ds)};
            const Rational pin = boundary::pi_value(wn);
            Rational worst = 0;
            for (const char* u : {"2", "21", "22", "211"}) {
                Rational val = characters::grouped_character_ratio(
                    FibWord::parse(u).two_positions(), wn.two_positions());
                if (val < 0) val = -val;
                if (val > worst) worst = val;
            }
            std::cout << n << "," << decimal_string(pin, 9) << ",0.000000000,"
                      << decimal_string(worst, 9) << ",0.000000000,"
                      << decimal_string(worst, 9) << "\n";
        }
        return 0;
    }
    throw std::invalid_argument("--mode must be approx or plancherel");
}

int run_poly(const std::string& kind, const std::string& word, int n,
             const std::string& coords, Format fmt) {
    ncpoly::NcPoly f = [&] {
        if (kind == "s") return ncpoly::s_poly(FibWord::parse(word));
        if (kind == "p") return ncpoly::p_poly(FibWord::parse(word));
        if (kind == "P") return ncpoly::P_poly(n);
        if (kind == "Q") return ncpoly::Q_poly(n);
        throw std::invalid_argument("--kind must be s, p, P or Q");
    }();
    if (!coords.empty()) {
        lattice::LevelFn c = coords == "s" ? ncpoly::to_s_coords(f)
                             : coords == "p"
                                 ? ncpoly::to_p_coords(f)
                                 : throw std::invalid_argument("--coords must be s or p");
        const auto& lv = lattice::level(c.level);
        if (fmt == Format::json) {
            io::json j;
            j["schema_version"] = io::schema_version;
            j["basis"] = coords;
            j["degree"] = c.level;
            io::json vals;
            for (std::size_t i = 0; i < lv.size(); ++i)
                vals[lv[i].display()] = rational_to_string(c.values[i]);
            j["coords"] = vals;
            std::cout << j.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < lv.size(); ++i)
                std::cout << lv[i].display() << (fmt == Format::csv ? "," : " = ")
                          << rational_to_string(c.values[i]) << "\n";
        }
        return 0;
    }
    if (fmt == Format::json)
        std::cout << io::ncpoly_json(f).dump(2) << "\n";
    else
        std::cout << f.to_string() << "\n";
    return 0;
}

int run_verify(const std::string& suite, int nmax, long trials, long samples,
               std::uint64_t seed, Format fmt) {
    std::vector<Report> reports;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };

    if (want("poset")) reports.push_back(lattice::verify_differential(nmax));
    if (want("sums"))
        reports.push_back(lattice::verify_sum_identities(nmax, std::max(0, nmax - 1)));
    if (want("pieri")) reports.push_back(ncpoly::verify_pieri(std::min(nmax, 8)));
    if (want("chars"))
        reports.push_back(characters::verify_char_agreement(std::min(nmax, 9)));
    if (want("inverse")) {
        Report inv("inverse transition (6.13)");
        for (int n = 0; n <= std::min(nmax, 9); ++n) inv.merge(characters::verify_inverse(n));
        reports.push_back(std::move(inv));
    }
    if (want("harmonic")) {
        const int depth = std::min(nmax, 8);
        reports.push_back(harmonic::check_harmonic(harmonic::phi_plancherel(), depth));
        reports.push_back(
            harmonic::check_harmonic(harmonic::psi_type1(FibWord::parse("2")), depth));
        reports.push_back(
            harmonic::check_harmonic(harmonic::psi_type1(FibWord::parse("12")), depth));
        reports.push_back(harmonic::check_harmonic(
            harmonic::phi_summable(boundary::SummableWord::from_positions({3, 7})),
            depth));
    }
    if (want("contraction")) {
        Report rep("contraction laws");
        auto phiP = harmonic::phi_plancherel();
        auto psi2 = harmonic::psi_type1(FibWord::parse("2"));
        auto phiw =
            harmonic::phi_summable(boundary::SummableWord::from_positions({3}));
        const int depth = std::min(nmax, 6);
        for (const auto& phi : {psi2, phiw}) {
            auto c0 = harmonic::contract(phi, Rational(0));
            auto c1 = harmonic::contract(phi, Rational(1));
            for (int n = 0; n <= depth; ++n) {
                auto a0 = c0.eval_level(n);
                auto ap = phiP.eval_level(n);
                auto a1 = c1.eval_level(n);
                auto raw = phi.eval_level(n);
                for (std::size_t i = 0; i < a0.size(); ++i) {
                    rep.check(a0[i].exact_value() == ap[i].exact_value(),
                              "C_0 != plancherel");
                    rep.check(a1[i].exact_value() == raw[i].exact_value(),
                              "C_1 != identity");
                }
            }
        }
        auto nested = harmonic::contract(harmonic::contract(psi2, Rational(1, 2)),
                                         Rational(2, 3));
        auto flat = harmonic::contract(psi2, Rational(1, 3));
        for (int n = 0; n <= depth; ++n) {
            auto a = nested.eval_level(n);
            auto b = flat.eval_level(n);
            for (std::size_t i = 0; i < a.size(); ++i)
                rep.check(a[i].exact_value() == b[i].exact_value(), "semigroup fails");
        }
        auto cb = harmonic::contract(phiw, Rational(1, 2));
        for (int n = 0; n <= depth; ++n) {
            auto direct = cb.eval_level(n);
            auto viap = harmonic::eval_level_via_p(cb, n);
            for (std::size_t i = 0; i < direct.size(); ++i)
                rep.check(direct[i].exact_value() == viap[i].exact_value(),
                          "beta-scaling route disagrees");
        }
        reports.push_back(std::move(rep));
    }
    if (want("montecarlo")) {
        Report rep("monte carlo consistency");
        const int depth = std::min(nmax, 8);
        stochastic::WalkConfig cfg;
        cfg.target_level = depth;
        cfg.samples = samples > 0 ? samples : 20000;
        cfg.seed = seed;
        auto emp = stochastic::sample_walk(cfg);
        auto exact = harmonic::central_measure(harmonic::phi_plancherel(), depth);
        auto tv = stochastic::tv_distance(emp, exact);
        rep.check(tv <= Rational(1, 20),
                  "plancherel TV distance " + decimal_string(tv, 6) + " > 0.05");
        reports.push_back(std::move(rep));
    }
    if (want("inequalities"))
        reports.push_back(boundary::verify_inequalities(trials > 0 ? trials : 2000, seed));
    if (want("injectivity")) {
        Report rep("parameter recovery (injectivity)");
        stochastic::SplitMix64 rng(seed);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::int64_t> pos;
            std::int64_t next = 1 + static_cast<std::int64_t>(rng.next() % 3);
            while (next <= 8) {
                pos.push_back(next);
                next += 2 + static_cast<std::int64_t>(rng.next() % 4);
            }
            const Rational beta(1 + static_cast<long>(rng.next() % 7),
                                7 + static_cast<long>(rng.next() % 3));
            auto w = boundary::SummableWord::from_positions(pos);
            std::vector<Rational> values;
            for (std::int64_t k = 2; k <= 10; ++k)
                values.push_back(pow_rational(beta, k) *
                                 boundary::pi_k_value(w, k).exact_value());
            auto rec = boundary::recover_boundary_point(values);
            rep.check(rec.positions == pos && rec.beta == beta,
                      "recovery failed for " + w.spec_string());
        }
        reports.push_back(std::move(rep));
    }

    if (reports.empty()) throw std::invalid_argument("unknown suite: " + suite);
    bool ok = true;
    if (fmt == Format::json) {
        io::json j;
        j["schema_version"] = io::schema_version;
        io::json rows = io::json::array();
        for (const auto& r : reports) {
            rows.push_back(io::report_json(r));
            ok = ok && r.ok();
        }
        j["suites"] = rows;
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    for (const auto& r : reports) {
        std::cout << r.summary() << "\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computational engine for the Young-Fibonacci lattice"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config");
    std::string format = "text";
    app.add_option("--format", format, "Output format: text, json or csv")
        ->capture_default_str();
    int level_cap = 30;
    app.add_option("--level-cap", level_cap, "Cap on full-level enumeration")
        ->capture_default_str();

    auto* c_level = app.add_subcommand("level", "List all words of a rank");
    int n_level = 0;
    c_level->add_option("--n", n_level, "Rank")->required();

    auto* c_cover = app.add_subcommand("cover", "Successors and predecessors of a word");
    std::string cover_word;
    c_cover->add_option("--word", cover_word, "Fibonacci word")->required();

    auto* c_dim = app.add_subcommand("dim", "Path count and Martin kernel");
    std::string dim_from = "e", dim_to;
    c_dim->add_option("--from", dim_from, "Lower word")->capture_default_str();
    c_dim->add_option("--to", dim_to, "Upper word")->required();

    auto* c_chars = app.add_subcommand("chars", "Character matrix at a level");
    int n_chars = 0;
    std::string chars_method = "verify";
    bool chars_check = false;
    c_chars->add_option("--n", n_chars, "Level")->required();
    c_chars->add_option("--method", chars_method,
                        "recursive, product, block, inverse or verify")
        ->capture_default_str();
    c_chars->add_flag("--check", chars_check, "Run agreement and inverse verification");

    auto* c_harmonic = app.add_subcommand("harmonic", "Harmonic functions");
    auto* c_heval = c_harmonic->add_subcommand("eval", "Evaluate on a level");
    std::string h_kind = "plancherel", h_word = "e", h_positions = "positions=",
                h_tau;
    int h_level = 0;
    std::vector<std::string> h_plabels;
    c_heval->add_option("--kind", h_kind, "plancherel, type1 or summable")
        ->capture_default_str();
    c_heval->add_option("--word", h_word, "type1 word");
    c_heval->add_option("--positions", h_positions, "summable word spec");
    c_heval->add_option("--tau", h_tau, "contract by C_tau first");
    c_heval->add_option("--level", h_level, "Level to evaluate")->required();
    c_heval->add_option("--plabel", h_plabels, "Also evaluate phi(p_u) at these labels");

    auto* c_walk = app.add_subcommand("walk", "Seeded Monte Carlo growth walks");
    std::string w_kind = "plancherel", w_tau, w_base, w_start = "e";
    int w_level = 4;
    long w_samples = 10000;
    std::uint64_t w_seed = 20240817;
    c_walk->add_option("--kind", w_kind, "plancherel or mixed")->capture_default_str();
    c_walk->add_option("--tau", w_tau, "Mixing parameter for mixed walks");
    c_walk->add_option("--base", w_base,
                       "Base function: plancherel, type1:WORD, summable:SPEC");
    c_walk->add_option("--start", w_start, "Start word (plancherel walks)")
        ->capture_default_str();
    c_walk->add_option("--level", w_level, "Target level")->capture_default_str();
    c_walk->add_option("--samples", w_samples, "Sample count")->capture_default_str();
    c_walk->add_option("--seed", w_seed, "64-bit seed")->capture_default_str();

    auto* c_conv = app.add_subcommand("converge", "Boundary convergence experiments");
    std::string cv_mode = "approx", cv_beta = "1/2", cv_word = "positions=3",
                cv_label = "2";
    std::int64_t cv_nmax = 2000;
    int cv_points = 20;
    c_conv->add_option("--mode", cv_mode, "approx or plancherel")->capture_default_str();
    c_conv->add_option("--beta", cv_beta, "Scaling parameter")->capture_default_str();
    c_conv->add_option("--word", cv_word, "Summable word spec")->capture_default_str();
    c_conv->add_option("--u", cv_label, "p-label u0")->capture_default_str();
    c_conv->add_option("--nmax", cv_nmax, "Largest sequence index")
        ->capture_default_str();
    c_conv->add_option("--points", cv_points, "Rows to emit")->capture_default_str();

    auto* c_poly = app.add_subcommand("poly", "Print ring elements and coordinates");
    std::string po_kind = "s", po_word = "e", po_coords;
    int po_n = 0;
    c_poly->add_option("--kind", po_kind, "s, p (by word) or P, Q (by index)")
        ->capture_default_str();
    c_poly->add_option("--word", po_word, "Label word for s/p");
    c_poly->add_option("--n", po_n, "Index for P/Q");
    c_poly->add_option("--coords", po_coords, "Print coordinates in basis s or p");

    auto* c_verify = app.add_subcommand("verify", "Run verification suites");
    std::string v_suite = "all";
    int v_nmax = 8;
    long v_trials = 0;
    long v_samples = 0;
    std::uint64_t v_seed = 20240817;
    c_verify
        ->add_option("--suite", v_suite,
                     "all, poset, sums, pieri, chars, inverse, harmonic, contraction, "
                     "montecarlo, inequalities or injectivity")
        ->capture_default_str();
    c_verify->add_option("--nmax", v_nmax, "Depth")->capture_default_str();
    c_verify->add_option("--trials", v_trials, "Trials for the inequality fuzzer");
    c_verify->add_option("--samples", v_samples, "Samples for the Monte Carlo suite");
    c_verify->add_option("--seed", v_seed, "64-bit seed")->capture_default_str();

    try {
        app.parse(argc, argv);
        lattice::set_level_cap(level_cap);
        const Format fmt = parse_format(format);
        if (*c_level) return run_level(n_level, fmt);
        if (*c_cover) return run_cover(cover_word, fmt);
        if (*c_dim) return run_dim(dim_from, dim_to, fmt);
        if (*c_chars) return run_chars(n_chars, chars_method, chars_check, fmt);
        if (*c_harmonic) {
            if (!*c_heval) throw std::invalid_argument("usage: harmonic eval ...");
            return run_harmonic_eval(h_kind, h_word, h_positions, h_tau, h_level,
                                     h_plabels, fmt);
        }
        if (*c_walk)
            return run_walk(w_kind, w_tau, w_base, w_start, w_level, w_samples, w_seed,
                            fmt);
        if (*c_conv)
            return run_converge(cv_mode, cv_beta, cv_word, cv_label, cv_nmax, cv_points);
        if (*c_poly) return run_poly(po_kind, po_word, po_n, po_coords, fmt);
        if (*c_verify)
            return run_verify(v_suite, v_nmax, v_trials, v_samples, v_seed, fmt);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
