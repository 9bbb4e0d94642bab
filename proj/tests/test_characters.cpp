#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "yf/characters.hpp"
#include "yf/io.hpp"

using namespace yf;
using characters::Method;

namespace {

Rational entry(const std::string& u, const std::string& v, Method m) {
    return characters::char_entry(FibWord::parse(u), FibWord::parse(v), m);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("recurrence anchor and single steps") {
    CHECK(characters::char_recursive(FibWord(), FibWord()) == 1);
    CHECK(entry("2", "2", Method::recursive) == -1);
    CHECK(entry("111", "21", Method::recursive) == 2);
    CHECK(entry("12", "21", Method::recursive) == 0);
    CHECK(entry("21", "12", Method::recursive) == 1);
    CHECK(entry("2", "11", Method::recursive) == 1);
    CHECK_THROWS_AS(characters::char_recursive(FibWord::parse("1"), FibWord::parse("2")),
                    std::invalid_argument);
}

TEST_CASE("product form carries the dimension factor") {
    CHECK(entry("2", "2", Method::product) == -1);
    CHECK(entry("111", "21", Method::product) == 2);  // no deltas: X = d(v)
    CHECK(entry("12", "21", Method::product) == 0);
    CHECK(characters::char_normalized(FibWord::parse("2"), FibWord::parse("2")) == -1);
    // X~ = X / d(v) on a nontrivial pair
    auto u = FibWord::parse("211");
    auto v = FibWord::parse("22");
    CHECK(characters::char_normalized(u, v) ==
          characters::char_product(u, v) / Rational(dim_product(v)));
}

TEST_CASE("block splitting form") {
    CHECK(entry("111", "21", Method::block) == 2);
    CHECK(entry("21", "12", Method::block) == 1);
    CHECK(entry("2", "11", Method::block) == 1);
    CHECK(entry("12", "21", Method::block) == 0);
}

TEST_CASE("inverse block splitting form") {
    CHECK(entry("2", "2", Method::inverse_block) == -1);
    CHECK(entry("11", "2", Method::inverse_block) == 1);
    CHECK(entry("111", "21", Method::inverse_block) == 2);
}

TEST_CASE("four-way agreement and zero characterization to rank 7") {
    auto rep = characters::verify_char_agreement(7);
    INFO(rep.summary());
    CHECK(rep.ok());
}

TEST_CASE("small matrices") {
    auto m1 = characters::char_matrix(1);
    CHECK(m1.rows == std::vector<std::vector<Rational>>{{Rational(1)}});

    auto m2 = characters::char_matrix(2);
    CHECK(m2.rows == std::vector<std::vector<Rational>>({{Rational(1), Rational(1)},
                                                         {Rational(1), Rational(-1)}}));

    auto m3 = characters::char_matrix(3);
    CHECK(m3.rows ==
          std::vector<std::vector<Rational>>({{Rational(1), Rational(1), Rational(2)},
                                              {Rational(1), Rational(-1), Rational(0)},
                                              {Rational(1), Rational(1), Rational(-1)}}));

    CHECK_THROWS_AS(characters::char_matrix(13), std::domain_error);
}

TEST_CASE("golden matrices for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        auto cm = characters::char_matrix(n);
        std::string expected =
            read_file(std::string(YF_TEST_DATA_DIR) + "/chars_n" + std::to_string(n) +
                      ".json");
        CHECK(io::char_matrix_json(cm).dump(2) + "\n" == expected);
    }
}

TEST_CASE("inverse transition to rank 6") {
    for (int n = 0; n <= 6; ++n) {
        auto rep = characters::verify_inverse(n);
        INFO(rep.summary());
        CHECK(rep.ok());
    }
}

TEST_CASE("normalized entries obey the definitional grouped bound") {
    for (int n = 0; n <= 7; ++n) {
        const auto& lv = lattice::level(n);
        for (const auto& u : lv) {
            const auto deltas = u.two_positions();
            for (const auto& v : lv) {
                Rational bound = 1;
                std::size_t j = 0;
                for (auto d : v.two_positions()) {
                    if (deltas.empty() || d < deltas.front()) continue;
                    while (j + 1 < deltas.size() && deltas[j + 1] <= d) ++j;
                    Rational f = 1 - Rational(deltas[j] + 1, d);
                    if (f < 0) f = -f;
                    if (f > 1) bound *= f;
                }
                Rational x = characters::char_normalized(u, v);
                if (x < 0) x = -x;
                CHECK(x <= bound);
            }
        }
    }
}

TEST_CASE("the all-ones row lists dimensions") {
    for (int n = 0; n <= 8; ++n) {
        std::vector<std::uint8_t> ds(static_cast<std::size_t>(n), 1);
        FibWord ones{std::move(ds)};
        for (const auto& v : lattice::level(n))
            CHECK(characters::char_product(ones, v) == Rational(dim_product(v)));
    }
}

TEST_CASE("verify mode rejects nothing on consistent levels") {
    CHECK_NOTHROW(characters::char_matrix(6, Method::verify));
}
