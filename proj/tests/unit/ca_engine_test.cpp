#include <doctest.h>

#include <pqca/ca.hpp>
#include <pqca/error.hpp>

#include <random>

using namespace pqca;

namespace {

const Params P32 = Params::make(3, 2);

Word w(const char *text) { return parse_word(P32, text); }

// g from the digit split x = x1 q + x0, y = y1 q + y0: x0 p + y1.
Digit g_oracle(std::uint32_t p, std::uint32_t q, Digit x, Digit y) {
    const Digit x0 = x - (x / q) * q;
    const Digit y1 = (y - y % q) / q;
    return x0 * p + y1;
}

// F = shift^{-1} o G o G on words: two G passes, keep the lost cell at the left.
Word F_oracle(const Params &params, const Word &in) {
    Word g1, g2;
    for (std::size_t i = 0; i + 1 < in.size(); ++i)
        g1.push_back(g_oracle(params.p(), params.q(), in[i], in[i + 1]));
    for (std::size_t i = 0; i + 1 < g1.size(); ++i)
        g2.push_back(g_oracle(params.p(), params.q(), g1[i], g1[i + 1]));
    return g2;
}

} // namespace

TEST_CASE("local rule g reproduces the (3,2) table") {
    const int table[6][6] = {{0, 0, 1, 1, 2, 2}, {3, 3, 4, 4, 5, 5}, {0, 0, 1, 1, 2, 2},
                             {3, 3, 4, 4, 5, 5}, {0, 0, 1, 1, 2, 2}, {3, 3, 4, 4, 5, 5}};
    for (Digit x = 0; x < 6; ++x)
        for (Digit y = 0; y < 6; ++y)
            CHECK(g_local(P32, x, y) == static_cast<Digit>(table[x][y]));
    CHECK(g_local(P32, 1, 2) == 4);
    CHECK(g_local(P32, 5, 5) == 5);
}

TEST_CASE("local rules agree with the digit-split oracle") {
    for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {5, 3}, {4, 3}, {7, 4}, {2, 3}}) {
        const Params params = Params::make(p, q);
        const Digit n = params.base();
        for (Digit x = 0; x < n; ++x)
            for (Digit a = 0; a < n; ++a) {
                REQUIRE(g_local(params, x, a) == g_oracle(params.p(), params.q(), x, a));
                for (Digit y = 0; y < n; ++y)
                    REQUIRE(f_local(params, x, a, y) ==
                            g_oracle(p, q, g_oracle(p, q, x, a), g_oracle(p, q, a, y)));
            }
    }
    CHECK(f_local(P32, 3, 4, 3) == 3);
    CHECK(f_local(P32, 2, 0, 5) == 1);
    CHECK(f_local(P32, 0, 0, 0) == 0);
}

TEST_CASE("word stepping") {
    CHECK(step_G_word(P32, w("3434205")) == w("515102"));
    CHECK(step_G_word(P32, w("00")) == w("0"));
    CHECK(step_G_word(P32, w("0530")) == w("243"));
    CHECK(step_F_word(P32, w("3434205"), 1) == w("35331"));
    CHECK(step_F_word(P32, w("3434205"), 2) == w("521"));
    CHECK(step_F_word(P32, w("3434205"), 3) == w("0"));
    CHECK(step_F_word(P32, w("3434205"), 0) == w("3434205"));
    CHECK_THROWS_AS(step_F_word(P32, w("3434205"), 4), Error);
    CHECK_THROWS_AS(step_G_word(P32, w("3")), Error);

    SUBCASE("F matches two G passes on random words") {
        std::mt19937_64 rng(11);
        for (auto [p, q] : {std::pair{3, 2}, {5, 3}, {7, 4}}) {
            const Params params = Params::make(p, q);
            for (int s = 0; s < 300; ++s) {
                Word in(3 + rng() % 12);
                for (auto &d : in)
                    d = static_cast<Digit>(rng() % params.base());
                REQUIRE(step_F_word(params, in, 1) == F_oracle(params, in));
            }
        }
    }
}

TEST_CASE("configuration stepping multiplies exactly") {
    const FiniteConfig c = config_of_rat(P32, Rat(11, 2));
    const FiniteConfig g = step_G_config(P32, c);
    CHECK(rat_of_config(P32, g) == Rat(33, 2));
    CHECK(format_config(P32, g) == "24.3");
    CHECK(step_G_config(P32, FiniteConfig{}).is_zero());
    CHECK(step_G_config(P32, config_of_rat(P32, 1)) == config_of_rat(P32, 3));

    const FiniteConfig f = step_F_config(P32, c, 1);
    CHECK(rat_of_config(P32, f) == Rat(33, 4));
    CHECK(format_config(P32, f) == "12.13");
    CHECK(step_F_config(P32, c, 0) == c);
    CHECK(step_F_config(P32, f, -1) == c);

    SUBCASE("multiplication law on random rationals, several pairs") {
        std::mt19937_64 rng(5);
        for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {5, 3}, {4, 3}, {7, 4}}) {
            const Params params = Params::make(p, q);
            for (int s = 0; s < 200; ++s) {
                Nat den = pow(params.p(), rng() % 5) * pow(params.q(), rng() % 5);
                const Rat xi = make_rat(Nat(std::to_string(rng() % 100000)), den);
                const FiniteConfig x = config_of_rat(params, xi);
                REQUIRE(rat_of_config(params, step_G_config(params, x)) == xi * p);
                REQUIRE(rat_of_config(params, step_F_config(params, x, 1)) == xi * p / q);
                REQUIRE(rat_of_config(params, step_F_config(params, x, 3)) == xi * Rat(p * p * p, q * q * q));
                REQUIRE(rat_of_config(params, step_F_config(params, x, -2)) == xi * Rat(q * q, p * p));
            }
        }
    }

    SUBCASE("stepping commutes with translation") {
        std::mt19937_64 rng(8);
        for (int s = 0; s < 200; ++s) {
            Word digits(1 + rng() % 8);
            for (auto &d : digits)
                d = static_cast<Digit>(rng() % 6);
            const FiniteConfig x(static_cast<std::int64_t>(rng() % 9) - 4, digits);
            const std::int64_t shift = static_cast<std::int64_t>(rng() % 7) - 3;
            REQUIRE(step_F_config(P32, x.translated(shift), 1) == step_F_config(P32, x, 1).translated(shift));
            REQUIRE(step_G_config(P32, x.translated(shift)) == step_G_config(P32, x).translated(shift));
        }
    }
}

TEST_CASE("closed form for F^t") {
    CHECK(ftpow_closed_form(P32, w("3434205"), 2) == w("521"));
    CHECK(ftpow_closed_form(P32, w("3434205"), 3) == w("0"));
    CHECK(ftpow_closed_form(P32, w("3434205"), 0) == w("3434205"));
    CHECK_THROWS_AS(ftpow_closed_form(P32, w("34"), 1), Error);

    SUBCASE("equals direct iteration on random words of other pairs") {
        std::mt19937_64 rng(21);
        for (auto [p, q] : {std::pair{5, 2}, {5, 3}, {4, 3}, {7, 4}}) {
            const Params params = Params::make(p, q);
            for (int s = 0; s < 300; ++s) {
                Word in(1 + rng() % 14);
                for (auto &d : in)
                    d = static_cast<Digit>(rng() % params.base());
                const std::size_t t = rng() % ((in.size() - 1) / 2 + 1);
                REQUIRE(ftpow_closed_form(params, in, t) == step_F_word(params, in, t));
            }
        }
    }
}

TEST_CASE("space-time diagrams") {
    const SpaceTime fig3 = render_space_time(P32, w("3434205"), 3);
    REQUIRE(fig3.rows.size() == 4);
    CHECK(fig3.rows[1].word == w("35331"));
    CHECK(fig3.rows[2].word == w("521"));
    CHECK(fig3.rows[3].word == w("0"));
    CHECK(fig3.rows[3].leftmost == 3);
    CHECK(format_space_time(P32, fig3) == "3434205\n 35331\n  521\n   0\n");
    CHECK(render_space_time(P32, w("3434205"), 0).rows.size() == 1);

    const Params binary_like = Params::make(2, 3);
    const SpaceTime shift = render_space_time(binary_like, parse_word(binary_like, "01101001"), 3, Rule::Shift);
    CHECK(format_space_time(binary_like, shift) == "01101001\n1101001\n101001\n01001\n");
}
