#include <catch2/catch_amalgamated.hpp>

#include "yf/boundary.hpp"

using namespace yf;
using boundary::OmegaPoint;
using boundary::SummableWord;

TEST_CASE("summable word grammar") {
    auto w = SummableWord::parse("positions=3,7,15");
    CHECK(w.finitary);
    CHECK(w.positions == std::vector<std::int64_t>({3, 7, 15}));

    auto t = SummableWord::parse("positions=1,4,9,16;tailbound=0.05");
    CHECK_FALSE(t.finitary);
    CHECK(t.tail_bound == Rational(1, 20));

    CHECK(SummableWord::parse("positions=").positions.empty());

    CHECK_THROWS_AS(SummableWord::parse("pos=3"), std::invalid_argument);
    CHECK_THROWS_AS(SummableWord::parse("positions=3,4"), std::invalid_argument);
    CHECK_THROWS_AS(SummableWord::parse("positions=0"), std::invalid_argument);
    CHECK_THROWS_AS(SummableWord::parse("tailbound=0.1"), std::invalid_argument);
    CHECK(t.spec_string() == "positions=1,4,9,16;tailbound=1/20");
}

TEST_CASE("digit extraction from the right") {
    auto w = SummableWord::from_positions({3});
    CHECK(w.rightmost_digits(5).display() == "11211");
    CHECK(w.rightmost_digits(0).display() == "e");
    CHECK(SummableWord::from_positions({1}).rightmost_digits(3).display() == "112");

    auto t = SummableWord::with_tail({3}, Rational(1, 100));
    CHECK(t.rightmost_digits(2).display() == "11");
    CHECK(t.rightmost_digits(3).display() == "211");  // ranks 1..4 are known
    CHECK_THROWS_AS(t.rightmost_digits(4), std::invalid_argument);
}

TEST_CASE("pi and pi_k on finite words") {
    CHECK(boundary::pi_value(FibWord::parse("211")) == Rational(2, 3));
    CHECK(boundary::pi_value(FibWord::parse("21")) == Rational(1, 2));
    CHECK(boundary::pi_value(FibWord::parse("111")) == 1);
    CHECK(boundary::pi_value(FibWord::parse("2")) == 1);  // d = 1 excluded

    CHECK(boundary::pi_k_value(FibWord::parse("211"), 2) == Rational(1, 3));
    CHECK(boundary::pi_k_value(FibWord::parse("2"), 2) == -1);
    CHECK(boundary::pi_k_value(FibWord::parse("12"), 3) == 1);
    CHECK_THROWS_AS(boundary::pi_k_value(FibWord::parse("2"), 1), std::invalid_argument);
}

TEST_CASE("pi on summable words, exact and certified") {
    auto w = SummableWord::from_positions({2, 5});
    CHECK(boundary::pi_value(w).exact_value() == Rational(1, 2) * Rational(4, 5));
    CHECK(boundary::pi_value(SummableWord::from_positions({})).exact_value() == 1);

    auto t = SummableWord::with_tail({2, 5}, Rational(1, 1000));
    auto enc = boundary::pi_value(t);
    CHECK_FALSE(enc.is_exact());
    CHECK(enc.contains(Rational(2, 5)));  // the finitary value
    CHECK(enc.width() <= Rational(2, 5) * Rational(1, 1000) + Rational(1, 100000));

    auto pk = boundary::pi_k_value(t, 3);
    CHECK(pk.contains(boundary::pi_k_value(SummableWord::from_positions({2, 5}), 3)
                          .exact_value()));

    // uncertifiable: the tail may hide positions at or below k
    auto shallow = SummableWord::with_tail({2}, Rational(1, 10));
    CHECK_THROWS_AS(boundary::pi_k_value(shallow, 5), std::invalid_argument);
}

TEST_CASE("pi_k agrees with the p-label functional value") {
    // pi_k(w) = phi_w(p_u) for u = 1^inf 2 1^{k-2}
    for (int k = 2; k <= 10; ++k) {
        std::vector<std::uint8_t> ds(static_cast<std::size_t>(k - 2), 1);
        ds.push_back(2);
        harmonic::PWordLabel u{FibWord(std::move(ds))};
        REQUIRE(u.essential_rank() == k);
        for (const auto& pos :
             {std::vector<std::int64_t>{3}, {1, 4}, {2, 4, 8}, {5, 7}, {}}) {
            auto w = SummableWord::from_positions(pos);
            auto phi = harmonic::phi_summable(w);
            CHECK(phi.eval_p(u).exact_value() ==
                  boundary::pi_k_value(w, k).exact_value());
        }
    }
}

TEST_CASE("approximating sequence shapes") {
    auto w = SummableWord::from_positions({3});
    auto v1 = boundary::approx_sequence(Rational(1), w, 3);
    CHECK(v1.display() == "111211");  // no head, s_3 = 3 ones
    CHECK(v1.rank() == 7);

    auto v0 = boundary::approx_sequence(Rational(0), w, 3);
    CHECK(v0.head_length() == 9);  // r_3 = 9

    auto vh = boundary::approx_sequence(Rational(1, 2), w, 4);
    CHECK(vh.head_length() == 12);  // r_n = 3n
    CHECK(vh.rank() == 2 * 4 + 1 + 2 * 12);

    // r_n rounds to nearest for general beta: (1-b^2)/b^2 = 11/25 at b = 5/6
    auto vr = boundary::approx_sequence(Rational(5, 6), w, 10);
    CHECK(vr.head_length() == 4);  // 110/25 = 4.4 -> 4

    CHECK_THROWS_AS(boundary::approx_sequence(Rational(3, 2), w, 3),
                    std::invalid_argument);
}

TEST_CASE("the worked convergence family hits its limit exactly") {
    // beta = 1/2, w = single 2 at position 3, u = 1^inf 2: the group factors
    // telescope to 1/4 and psi_{v^(n)}(p_u) = 1/12 for every n >= 3
    auto w = SummableWord::from_positions({3});
    for (std::int64_t n : {10, 40}) {
        auto vn = boundary::approx_sequence(Rational(1, 2), w, n);
        auto psi = harmonic::psi_type1(vn);
        CHECK(psi.eval_p(harmonic::PWordLabel::parse("2")).exact_value() ==
              Rational(1, 12));
        // essential rank 3: the target vanishes because 3 is a 2-position
        CHECK(psi.eval_p(harmonic::PWordLabel::parse("21")).exact_value() == 0);
    }
}

TEST_CASE("pi_k ratios of the approximating family converge at rate 1/n") {
    // beta = 3/5 makes r_n genuinely rounded, so the ratio error is nonzero
    const Rational beta(3, 5);
    auto w = SummableWord::from_positions({5});
    for (std::int64_t k : {2, 3}) {
        const Rational pik_w = boundary::pi_k_value(w, k).exact_value();
        REQUIRE(pik_w != 0);
        const Rational target = pow_rational(beta, k);
        double worst_c = 0.0;
        for (std::int64_t n : {250, 500, 1000, 2000}) {
            auto vn = boundary::approx_sequence(beta, w, n);
            Rational err = boundary::pi_k_value(vn, k) / pik_w - target;
            if (err < 0) err = -err;
            worst_c = std::max(worst_c, to_double(err) * static_cast<double>(n));
            if (n == 2000) CHECK(err <= Rational(1, 50));
        }
        INFO("k = " << k << ": observed |ratio - beta^k| * n <= " << worst_c);
        CHECK(worst_c < 50.0);  // sanity bound on the observed constant
    }
}

TEST_CASE("regularity diagnosis") {
    // all-ones words tend to the boundary point (beta = 1, w = 1^inf)
    std::vector<FibWord> ones;
    for (int n = 1; n <= 40; ++n) {
        std::vector<std::uint8_t> ds(static_cast<std::size_t>(n), 1);
        ones.emplace_back(std::move(ds));
    }
    auto rep = boundary::regularity_diagnose(ones);
    CHECK(rep.klass == boundary::LimitClass::boundary_point);
    CHECK(rep.beta_hat == 1.0);

    // 2's at positions 2,4,...: pi decays like 1/sqrt(m), Plancherel class
    std::vector<FibWord> evens;
    for (int m = 1; m <= 150; ++m) {
        std::vector<std::uint8_t> ds;
        ds.push_back(1);
        ds.insert(ds.end(), static_cast<std::size_t>(m), 2);
        evens.emplace_back(std::move(ds));
    }
    auto rep2 = boundary::regularity_diagnose(evens);
    CHECK(rep2.klass == boundary::LimitClass::plancherel);
    CHECK(rep2.pi_trajectory.back() <= 0.05);

    // the approximating family recovers beta = 1/2
    auto w = SummableWord::from_positions({3});
    std::vector<FibWord> approx;
    for (int n = 5; n <= 300; n += 5)
        approx.push_back(boundary::approx_sequence(Rational(1, 2), w, n));
    auto rep3 = boundary::regularity_diagnose(approx);
    CHECK(rep3.klass == boundary::LimitClass::boundary_point);
    CHECK(std::abs(rep3.beta_hat - 0.5) < 0.05);

    CHECK_THROWS_AS(boundary::regularity_diagnose({FibWord::parse("2"), FibWord::parse("11")}),
                    std::invalid_argument);
}

TEST_CASE("omega topology predicates") {
    auto w = SummableWord::from_positions({3});
    auto limit = OmegaPoint::pair(Rational(1, 2), w);

    std::vector<OmegaPoint> constant(5, limit);
    CHECK(boundary::omega_converges(constant, limit, 1e-9).converged);

    std::vector<OmegaPoint> to_p;
    for (int n = 1; n <= 30; ++n) to_p.push_back(OmegaPoint::pair(Rational(1, n), w));
    CHECK(boundary::omega_converges(to_p, OmegaPoint::plancherel(), 0.05).converged);

    std::vector<OmegaPoint> drift;
    for (int n = 1; n <= 6; ++n)
        drift.push_back(OmegaPoint::pair(
            Rational(1, 2), SummableWord::from_positions({3, 20 + 2 * n})));
    CHECK(boundary::omega_converges(drift, limit, 0.2).converged);
    CHECK_FALSE(boundary::omega_converges(drift, limit, 1e-6).converged);

    CHECK_THROWS_AS(OmegaPoint::pair(Rational(0), w), std::invalid_argument);
}

TEST_CASE("inequality fuzzing stays clean") {
    auto rep = boundary::verify_inequalities(2000, 0xC0FFEEULL);
    INFO(rep.summary());
    CHECK(rep.ok());

    // pinned instances from the lemmas
    CHECK(1 - Rational(2, 3) <= pow_rational(1 - Rational(1, 3), 2));  // (8.1) d=3,k=2
    auto v = FibWord::parse("211");
    CHECK(boost::multiprecision::abs(boundary::pi_k_value(v, 2)) <=
          pow_rational(Rational(2) * boundary::pi_value(v), 2));  // Lemma 8.3
    // Lemma 8.2 equality case at v = 2, u0 = 2
    auto psi = harmonic::psi_type1(FibWord::parse("2"));
    CHECK(boost::multiprecision::abs(
              psi.eval_p(harmonic::PWordLabel::parse("2")).exact_value()) ==
          boost::multiprecision::abs(boundary::pi_k_value(FibWord::parse("2"), 2)));
}
