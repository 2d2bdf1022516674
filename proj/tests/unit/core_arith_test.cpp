#include <doctest.h>

#include <pqca/config.hpp>
#include <pqca/error.hpp>
#include <pqca/params.hpp>
#include <pqca/rational.hpp>
#include <pqca/word.hpp>

#include <random>

using namespace pqca;

namespace {

const Params P32 = Params::make(3, 2);
const Params P53 = Params::make(5, 3);

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Parse;
}

// Horner in 64 bits, independent of the GMP path.
std::uint64_t horner(std::uint64_t base, const Word &w) {
    std::uint64_t m = 0;
    for (Digit d : w)
        m = m * base + d;
    return m;
}

// sum c(i) n^{-i} term by term
Rat value_oracle(std::uint64_t base, std::int64_t offset, const Word &digits) {
    Rat total = 0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        const std::int64_t pos = offset + static_cast<std::int64_t>(j);
        Rat weight = 1;
        for (std::int64_t s = 0; s < (pos < 0 ? -pos : pos); ++s)
            weight *= Rat(base);
        total += pos <= 0 ? Rat(Rat(digits[j]) * weight) : Rat(Rat(digits[j]) / weight);
    }
    return total;
}

} // namespace

TEST_CASE("params validation") {
    CHECK(P32.base() == 6);
    CHECK(P32.to_string() == "(3,2)");
    CHECK(P32.swapped() == Params::make(2, 3));
    CHECK(code_of([] { Params::make(4, 2); }) == ErrorCode::NonCoprime);
    CHECK(code_of([] { Params::make(3, 1); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { Params::make(-3, 2); }) == ErrorCode::OutOfRange);
}

TEST_CASE("digit decomposition is a bijection onto A_p x A_q") {
    CHECK(digit_decompose(P32, 5) == DigitPair{2, 1});
    CHECK(digit_decompose(P32, 0) == DigitPair{0, 0});
    CHECK(digit_decompose(P53, 13) == DigitPair{4, 1});
    for (const auto &params : {P32, P53, Params::make(7, 4)}) {
        std::vector<int> seen(params.base(), 0);
        for (Digit x = 0; x < params.base(); ++x) {
            auto [hi, lo] = digit_decompose(params, x);
            REQUIRE(hi < params.p());
            REQUIRE(lo < params.q());
            CHECK(hi * params.q() + lo == x);
            ++seen[hi * params.q() + lo];
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; }));
    }
}

TEST_CASE("integ and word_of_nat") {
    CHECK(integ(P32, parse_word(P32, "102")) == 38);
    CHECK(integ(P32, parse_word(P32, "000")) == 0);
    CHECK(integ(P32, parse_word(P32, "3434205")) == 175901);
    CHECK(code_of([] { integ(P32, Word{}); }) == ErrorCode::EmptyWord);
    CHECK(format_word(P32, word_of_nat(P32, 38, 3)) == "102");
    CHECK(format_word(P32, word_of_nat(P32, 0, 1)) == "0");
    CHECK(format_word(P32, word_of_nat(P32, 5095, 5)) == "35331");
    CHECK(code_of([] { word_of_nat(P32, 216, 3); }) == ErrorCode::Overflow);
    CHECK(code_of([] { word_of_nat(P32, -1, 3); }) == ErrorCode::Negative);

    SUBCASE("inverse pair on every m below (pq)^len, len <= 4") {
        for (const auto &params : {P32, Params::make(5, 2)}) {
            for (std::size_t len = 1; len <= 4; ++len) {
                std::uint64_t count = 1;
                for (std::size_t i = 0; i < len; ++i)
                    count *= params.base();
                for (std::uint64_t m = 0; m < count; ++m) {
                    const Word w = word_of_nat(params, Nat(std::to_string(m)), len);
                    REQUIRE(w.size() == len);
                    REQUIRE(horner(params.base(), w) == m);
                    REQUIRE(integ(params, w) == Nat(std::to_string(m)));
                }
            }
        }
    }
}

TEST_CASE("real_of_word") {
    CHECK(real_of_word(P32, parse_word(P32, "13")) == Rat(1, 4));
    CHECK(real_of_word(P32, Word{}) == 0);
    CHECK(real_of_word(P32, parse_word(P32, "5")) == Rat(5, 6));
}

TEST_CASE("word formatting") {
    const Params big = Params::make(7, 6);
    CHECK(format_word(big, Word{41, 0, 10}) == "41,0,10");
    CHECK(parse_word(big, "41,0,10") == Word{41, 0, 10});
    CHECK(format_word(Params::make(7, 4), Word{27, 10}) == "ra");
    CHECK(code_of([] { parse_word(P32, "6"); }) == ErrorCode::OutOfRange);
}

TEST_CASE("configurations") {
    const FiniteConfig c = config_of_rat(P32, Rat(11, 2));
    CHECK(c.offset() == 0);
    CHECK(c.digits() == Word{5, 3});
    CHECK(format_config(P32, c) == "5.3");
    CHECK(config_of_rat(P32, 0).is_zero());
    CHECK(code_of([] { config_of_rat(P32, Rat(1, 7)); }) == ErrorCode::NonTerminating);
    CHECK(code_of([] { config_of_rat(P32, Rat(-1, 2)); }) == ErrorCode::Negative);
    CHECK(rat_of_config(P32, FiniteConfig(-2, {1, 0, 2})) == 38);
    CHECK(rat_of_config(P32, FiniteConfig{}) == 0);
    CHECK(rat_of_config(P32, FiniteConfig(0, {5, 3})) == Rat(11, 2));

    SUBCASE("canonical form trims zeros") {
        CHECK(FiniteConfig(-3, {0, 0, 1, 0, 2, 0}) == FiniteConfig(-1, {1, 0, 2}));
        CHECK(FiniteConfig(4, {0, 0}).is_zero());
    }

    SUBCASE("digit at position i is xi_{-i}") {
        const FiniteConfig d = config_of_rat(P32, Rat(175901) + Rat(1, 4));
        CHECK(d.at(0) == 5);
        CHECK(d.at(-6) == 3);
        CHECK(d.at(1) == 1);
        CHECK(d.at(2) == 3);
        CHECK(d.at(3) == 0);
        CHECK(d.window(-6, 7) == parse_word(P32, "3434205"));
    }

    SUBCASE("round trip on random terminating rationals") {
        std::mt19937_64 rng(2024);
        for (const auto &params : {P32, P53, Params::make(7, 4)}) {
            for (int s = 0; s < 500; ++s) {
                Word digits(1 + rng() % 9);
                for (auto &d : digits)
                    d = static_cast<Digit>(rng() % params.base());
                const auto offset = static_cast<std::int64_t>(rng() % 11) - 5;
                const Rat xi = value_oracle(params.base(), offset, digits);
                const FiniteConfig c = config_of_rat(params, xi);
                REQUIRE(rat_of_config(params, c) == xi);
                REQUIRE(c == FiniteConfig(offset, digits));
            }
        }
    }
}

TEST_CASE("rationals") {
    CHECK(to_string(Rat(2, 3)) == "2/3");
    CHECK(to_string(Rat(1)) == "1/1");
    CHECK(to_string(Rat(0)) == "0/1");
    CHECK(parse_rat("6/9") == Rat(2, 3));
    CHECK(parse_rat("5") == 5);
    CHECK(code_of([] { parse_rat("1/0"); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { parse_rat("abc"); }) == ErrorCode::Parse);
    CHECK(floor(Rat(-1, 2)) == -1);
    CHECK(frac(Rat(13, 2)) == Rat(1, 2));
}
